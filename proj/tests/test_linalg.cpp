#include <cmath>
#include <random>

#include <doctest.h>

#include "ptverify/linalg.hpp"
#include "test_support.hpp"

using namespace ptverify;
using testsupport::close;
using testsupport::random_matrix;
using testsupport::uniform;

TEST_CASE("vector and matrix basics") {
    const Matrix2 m{{1.0, 2.0}, {0.5, 0.0}, {3.0, -1.0}, {0.0, 4.0}};
    CHECK(close(m.trace(), m.m11 + m.m22));
    CHECK(close(m.det(), m.m11 * m.m22 - m.m12 * m.m21));
    CHECK(close(m.adjoint().m12, std::conj(m.m21)));

    const Vector2 v{{3.0, 0.0}, {0.0, 4.0}};
    CHECK(v.norm2() == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(v.normalized().norm() == doctest::Approx(1.0).epsilon(1e-12));
    const Vector2 zero{};
    CHECK_THROWS_AS(zero.normalized(), InvalidInputError);

    // inner product is antilinear in the first slot, linear in the second
    const Vector2 w{{0.3, 0.7}, {-1.1, 0.2}};
    const Complex i{0.0, 1.0};
    CHECK(close(inner(v * i, w), -i * inner(v, w)));
    CHECK(close(inner(v, w * i), i * inner(v, w)));

    const Vector2 u{{0.5, -0.4}, {1.0, 0.0}};
    const Vector2 lhs = outer(v, w) * u;
    const Vector2 rhs = v * inner(w, u);
    CHECK((lhs - rhs).norm() <= 1e-12);
}

TEST_CASE("eigen2 on a diagonal matrix") {
    const Matrix2 m{1.0, 0.0, 0.0, 2.0};
    const EigenSystem2 eg = eigen2(m);
    CHECK(!eg.degenerate);
    CHECK(close(eg.lambda1, 2.0));
    CHECK(close(eg.lambda2, 1.0));
    CHECK(std::abs(eg.v1.b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(eg.v2.a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(residual_norm(m, eg.lambda1, eg.v1) <= 1e-14);
    CHECK(residual_norm(m, eg.lambda2, eg.v2) <= 1e-14);
}

TEST_CASE("eigen2 on the balanced gain-loss matrix") {
    const Matrix2 m{{0.0, 0.6}, 1.0, 1.0, {0.0, -0.6}};
    const EigenSystem2 eg = eigen2(m);
    CHECK(!eg.degenerate);
    CHECK(close(eg.lambda1, 0.8));
    CHECK(close(eg.lambda2, -0.8));
    const double tol = 1e-10 * (1.0 + m.frobenius());
    CHECK(residual_norm(m, eg.lambda1, eg.v1) <= tol);
    CHECK(residual_norm(m, eg.lambda2, eg.v2) <= tol);
    CHECK(eg.v1.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eg.v2.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen2 flags a defective matrix") {
    const Matrix2 jordan{0.0, 1.0, 0.0, 0.0};
    const EigenSystem2 eg = eigen2(jordan);
    CHECK(eg.degenerate);
    CHECK(close(eg.lambda1, 0.0));
    CHECK(close(eg.lambda2, 0.0));
    CHECK((eg.v1 - eg.v2).norm() == 0.0);
    CHECK(residual_norm(jordan, eg.lambda1, eg.v1) <= 1e-12);
}

TEST_CASE("eigen2 on a scalar matrix returns an orthonormal basis") {
    const Matrix2 m{3.0, 0.0, 0.0, 3.0};
    const EigenSystem2 eg = eigen2(m);
    CHECK(!eg.degenerate);
    CHECK(close(eg.lambda1, 3.0));
    CHECK(close(eg.lambda2, 3.0));
    CHECK(std::abs(inner(eg.v1, eg.v2)) <= 1e-12);
}

TEST_CASE("eigen2 rejects non-finite entries") {
    const Matrix2 bad{std::nan(""), 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(eigen2(bad), NonFiniteError);
}

TEST_CASE("eigen2 residual, trace and determinant on random matrices") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10000; ++k) {
        const Matrix2 m = random_matrix(rng);
        const EigenSystem2 eg = eigen2(m);
        const Complex tr = m.trace();
        const Complex det = m.det();
        REQUIRE(std::abs(eg.lambda1 + eg.lambda2 - tr) <= 1e-10 * (1.0 + std::abs(tr)));
        REQUIRE(std::abs(eg.lambda1 * eg.lambda2 - det) <= 1e-10 * (1.0 + std::abs(det)));
        if (eg.degenerate) continue;
        const double tol = 1e-10 * (1.0 + m.frobenius());
        REQUIRE(residual_norm(m, eg.lambda1, eg.v1) <= tol);
        REQUIRE(residual_norm(m, eg.lambda2, eg.v2) <= tol);
    }
}

TEST_CASE("is_hermitian") {
    const Matrix2 textbook{1.0, {0.0, 1.0}, {0.0, -1.0}, 1.0};
    CHECK(is_hermitian(textbook, 1e-12));

    const Complex e = std::polar(1.0, M_PI / 6);
    const Matrix2 twisted{e, 1.0, 1.0, std::conj(e)};
    CHECK(!is_hermitian(twisted, 1e-12));

    const Matrix2 flat{1.5, 1.0, 1.0, 1.5};
    CHECK(is_hermitian(flat, 1e-12));
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(Matrix2::identity(), 1e-12));
    const Matrix2 phases{std::polar(1.0, 0.7), 0.0, 0.0, std::polar(1.0, -0.7)};
    CHECK(is_unitary(phases, 1e-12));
    const Matrix2 stretch{2.0, 0.0, 0.0, 1.0};
    CHECK(!is_unitary(stretch, 1e-12));
}

TEST_CASE("sqrt_psd examples") {
    const Matrix2 a = sqrt_psd({4.0, 0.0, 0.0, 9.0});
    CHECK(close(a, {2.0, 0.0, 0.0, 3.0}));

    const Matrix2 m{1.36, {0.0, -1.2}, {0.0, 1.2}, 1.36};
    const Matrix2 root = sqrt_psd(m);
    const Matrix2 expected{1.0, {0.0, -0.6}, {0.0, 0.6}, 1.0};
    CHECK(close(root, expected));
    CHECK(close(root * root, m));

    CHECK(close(sqrt_psd(Matrix2::identity()), Matrix2::identity()));
}

TEST_CASE("sqrt_psd rejects bad inputs and clamps near-zero eigenvalues") {
    const Matrix2 not_herm{0.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(sqrt_psd(not_herm), NotHermitianError);

    const Matrix2 indefinite{-1.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(sqrt_psd(indefinite), NegativeEigenvalueError);

    const Matrix2 nearly{-1e-11, 0.0, 0.0, 1.0};
    const Matrix2 clamped = sqrt_psd(nearly);
    CHECK(std::abs(clamped.m11) <= 1e-10);
    CHECK(close(clamped.m22, 1.0, 1e-10));
}

TEST_CASE("sqrt_psd squares back to its argument") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 1000; ++k) {
        const Vector2 q = testsupport::random_unit_vector(rng);
        const Vector2 qp = detail::orthogonal_complement(q);
        const Complex a{uniform(rng, 0.0, 10.0), 0.0};
        const Complex b{uniform(rng, 0.0, 10.0), 0.0};
        const Matrix2 s = outer(q, q) * a + outer(qp, qp) * b;
        const Matrix2 ss = s * s;
        REQUIRE((sqrt_psd(ss) - s).frobenius() <= 1e-10 * (1.0 + ss.frobenius()));
    }
}

TEST_CASE("polar of a Hermitian positive matrix is trivial") {
    const Matrix2 m{2.0, 1.0, 1.0, 2.0};
    const PolarFactors f = polar(m);
    CHECK(close(f.u, Matrix2::identity()));
    CHECK(close(f.r, m));
}

TEST_CASE("polar recovers the positive factor of the gain-loss model") {
    const Matrix2 h{{0.0, 0.6}, 1.0, 1.0, {0.0, -0.6}};
    const PolarFactors f = polar(h);
    const Matrix2 expected{1.0, {0.0, -0.6}, {0.0, 0.6}, 1.0};
    CHECK(close(f.r, expected, 1e-10));
    CHECK((f.u * f.r - h).frobenius() <= 1e-10 * (1.0 + h.frobenius()));
    CHECK(is_unitary(f.u, 1e-10));
}

TEST_CASE("polar surfaces a singular positive factor") {
    const Complex e = std::polar(1.0, M_PI / 6);
    const Matrix2 h{e, 1.0, 1.0, std::conj(e)};
    CHECK_THROWS_AS(polar(h), SingularFactorError);

    const PolarFactors f = polar_completed(h);
    CHECK((f.u * f.r - h).frobenius() <= 1e-10 * (1.0 + h.frobenius()));
    CHECK(is_unitary(f.u, 1e-10));

    const Matrix2 zero{};
    const PolarFactors z = polar_completed(zero);
    CHECK(close(z.u, Matrix2::identity()));
    CHECK(z.r.frobenius() == 0.0);
}

TEST_CASE("polar reconstruction on random matrices") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 1000) {
        const Matrix2 m = random_matrix(rng);
        PolarFactors f;
        try {
            f = polar(m);
        } catch (const SingularFactorError&) {
            continue;
        }
        ++done;
        REQUIRE((f.u * f.r - m).frobenius() <= 1e-10 * (1.0 + m.frobenius()));
        REQUIRE(is_unitary(f.u, 1e-10));
        REQUIRE(is_hermitian(f.r, 1e-10));
        REQUIRE(detail::hermitian_eigs(f.r).lam_minus >= -1e-10);
    }
}

TEST_CASE("residual_norm quantifies an eigenpair claim") {
    const Matrix2 d{1.0, 0.0, 0.0, 2.0};
    CHECK(residual_norm(d, 1.0, {1.0, 0.0}) == 0.0);

    // candidate pair of the five-parameter family at r=1, s=2, t=0.5,
    // theta=pi/6, where the constraint angle is pi/6
    const double alpha = M_PI / 6;
    const double nf = 1.0 / std::sqrt(2.0 * std::cos(alpha));
    const Vector2 vplus{std::polar(nf, alpha / 2), std::polar(nf, -alpha / 2)};
    const Complex e = std::polar(1.0, M_PI / 6);

    const Matrix2 mismatched{e, 0.5, 2.0, std::conj(e)};
    const double res = residual_norm(mismatched, 1.7320508075688772, vplus);
    CHECK(res > 0.1);
    CHECK(res == doctest::Approx(0.8495221224235611).epsilon(1e-10));

    const Matrix2 matched{e, 1.0, 1.0, std::conj(e)};
    CHECK(residual_norm(matched, 1.7320508075688772, vplus) <= 1e-12);
}
