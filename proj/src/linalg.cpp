#include "ptverify/linalg.hpp"

#include <cmath>

namespace ptverify {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

} // namespace

double Vector2::norm() const { return std::sqrt(norm2()); }

bool Vector2::finite() const { return ptverify::finite(a) && ptverify::finite(b); }

Vector2 Vector2::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidInputError("cannot normalize the zero vector");
    return {a / n, b / n};
}

Complex inner(const Vector2& x, const Vector2& y) {
    return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
}

Matrix2 Matrix2::conj() const {
    return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)};
}

double Matrix2::frobenius() const {
    return std::sqrt(std::norm(m11) + std::norm(m12) + std::norm(m21) + std::norm(m22));
}

bool Matrix2::finite() const {
    return ptverify::finite(m11) && ptverify::finite(m12) && ptverify::finite(m21) &&
           ptverify::finite(m22);
}

Vector2 Matrix2::operator*(const Vector2& v) const {
    return {m11 * v.a + m12 * v.b, m21 * v.a + m22 * v.b};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
    return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
    return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
}

Matrix2 Matrix2::operator*(Complex c) const {
    return {m11 * c, m12 * c, m21 * c, m22 * c};
}

Matrix2 outer(const Vector2& v, const Vector2& w) {
    return {v.a * std::conj(w.a), v.a * std::conj(w.b),
            v.b * std::conj(w.a), v.b * std::conj(w.b)};
}

namespace {

/// Unit eigenvector of m for eigenvalue lam, from the better-conditioned row
/// of the adjugate of (m - lam I).
Vector2 eigvec_for(const Matrix2& m, Complex lam, bool* found) {
    const Vector2 cand1{m.m12, lam - m.m11};
    const Vector2 cand2{lam - m.m22, m.m21};
    const double n1 = cand1.norm2();
    const double n2 = cand2.norm2();
    const double scale = m.frobenius() + std::abs(lam);
    const double tiny = kEqualityTol * kEqualityTol * (1.0 + scale * scale);
    if (n1 <= tiny && n2 <= tiny) {
        if (found) *found = false;
        return {1.0, 0.0};
    }
    if (found) *found = true;
    return (n1 >= n2 ? cand1 : cand2).normalized();
}

} // namespace

EigenSystem2 eigen2(const Matrix2& m) {
    if (!m.finite()) throw NonFiniteError("eigen2: matrix has NaN/Inf entries");

    const Complex tr = m.trace();
    const Complex det = m.det();
    Complex sq = std::sqrt(tr * tr - 4.0 * det);
    // pick the root that avoids cancellation in tr + sq
    if ((std::conj(tr) * sq).real() < 0.0) sq = -sq;

    EigenSystem2 out;
    out.lambda1 = 0.5 * (tr + sq);
    out.lambda2 = std::abs(out.lambda1) > 0.0 ? det / out.lambda1 : tr - out.lambda1;

    const double close_tol =
        kEqualityTol * (1.0 + std::abs(out.lambda1) + std::abs(out.lambda2));
    if (std::abs(out.lambda1 - out.lambda2) <= close_tol) {
        const Complex mean = 0.5 * tr;
        const Matrix2 shifted = m - Matrix2::identity() * mean;
        if (shifted.frobenius() <= kEqualityTol * (1.0 + m.frobenius())) {
            // scalar matrix: diagonalizable, canonical basis
            out.v1 = {1.0, 0.0};
            out.v2 = {0.0, 1.0};
            return out;
        }
        // defective (exceptional point): a single eigendirection
        out.degenerate = true;
        out.v1 = eigvec_for(m, mean, nullptr);
        out.v2 = out.v1;
        return out;
    }

    out.v1 = eigvec_for(m, out.lambda1, nullptr);
    out.v2 = eigvec_for(m, out.lambda2, nullptr);
    return out;
}

bool is_hermitian(const Matrix2& m, double tol) {
    return (m - m.adjoint()).frobenius() <= tol;
}

bool is_unitary(const Matrix2& m, double tol) {
    return (m.adjoint() * m - Matrix2::identity()).frobenius() <= tol;
}

namespace detail {

HermitianEigs hermitian_eigs(const Matrix2& m) {
    // assumes m passed the Hermiticity predicate; work on the symmetrized part
    const double a = m.m11.real();
    const double c = m.m22.real();
    const Complex b = 0.5 * (m.m12 + std::conj(m.m21));

    const double mean = 0.5 * (a + c);
    const double half_diff = 0.5 * (a - c);
    const double rad = std::hypot(half_diff, std::abs(b));

    HermitianEigs out;
    out.lam_plus = mean + rad;
    out.lam_minus = mean - rad;
    if (rad <= kEqualityTol * kEqualityTol * (1.0 + std::abs(mean))) {
        out.scalar = true;
        out.v_plus = {1.0, 0.0};
        return out;
    }
    const Vector2 cand1{b, Complex(out.lam_plus - a, 0.0)};
    const Vector2 cand2{Complex(out.lam_plus - c, 0.0), std::conj(b)};
    out.v_plus = (cand1.norm2() >= cand2.norm2() ? cand1 : cand2).normalized();
    return out;
}

Vector2 orthogonal_complement(const Vector2& v) {
    return {-std::conj(v.b), std::conj(v.a)};
}

} // namespace detail

Matrix2 sqrt_psd(const Matrix2& m) {
    if (!m.finite()) throw NonFiniteError("sqrt_psd: matrix has NaN/Inf entries");
    const double scale = 1.0 + m.frobenius();
    if (!is_hermitian(m, kPredicateTol * scale))
        throw NotHermitianError("sqrt_psd: input is not Hermitian");

    auto eg = detail::hermitian_eigs(m);
    const double clamp = kPredicateTol * scale;
    if (eg.lam_minus < -clamp)
        throw NegativeEigenvalueError("sqrt_psd: eigenvalue below the PSD clamp threshold");
    const double lp = std::sqrt(std::max(eg.lam_plus, 0.0));
    const double lm = std::sqrt(std::max(eg.lam_minus, 0.0));

    if (eg.scalar) return Matrix2::identity() * Complex(lp, 0.0);

    const Matrix2 proj = outer(eg.v_plus, eg.v_plus);
    return proj * Complex(lp, 0.0) + (Matrix2::identity() - proj) * Complex(lm, 0.0);
}

namespace {

PolarFactors polar_impl(const Matrix2& h, bool complete_singular) {
    if (!h.finite()) throw NonFiniteError("polar: matrix has NaN/Inf entries");
    const Matrix2 hh = h.adjoint() * h;
    const Matrix2 r = sqrt_psd(hh);

    auto eg = detail::hermitian_eigs(hh);
    const double sp = std::sqrt(std::max(eg.lam_plus, 0.0));
    const double sm = std::sqrt(std::max(eg.lam_minus, 0.0));
    const double gate = kEqualityTol * h.frobenius();
    const bool singular = !(sm > gate);
    if (singular && !complete_singular)
        throw SingularFactorError("polar: positive factor is numerically singular");

    const Vector2 vp = eg.scalar ? Vector2{1.0, 0.0} : eg.v_plus;
    const Vector2 vm = detail::orthogonal_complement(vp);

    Matrix2 u;
    if (!singular) {
        // u = h * r^-1, assembled column-wise on the eigenbasis of r so that
        // u * (s_i v_i) reproduces h v_i exactly even when r is barely
        // invertible (a full matrix product would lose cond(r) digits here)
        const Vector2 u1 = (h * vp) * Complex(1.0 / sp, 0.0);
        const Vector2 u2 = (h * vm) * Complex(1.0 / sm, 0.0);
        u = outer(u1, vp) + outer(u2, vm);
    } else if (sp > gate) {
        // rank-one r: the range column is h v+ / sp, the null column is filled
        // with the unit vector orthogonal to it
        const Vector2 u1 = (h * vp) * Complex(1.0 / sp, 0.0);
        const Vector2 u2 = detail::orthogonal_complement(u1);
        u = outer(u1, vp) + outer(u2, vm);
    } else {
        u = Matrix2::identity(); // h == 0
    }
    return {u, r};
}

} // namespace

PolarFactors polar(const Matrix2& h) { return polar_impl(h, false); }

PolarFactors polar_completed(const Matrix2& h) { return polar_impl(h, true); }

double residual_norm(const Matrix2& m, Complex lam, const Vector2& v) {
    return (m * v - lam * v).norm();
}

} // namespace ptverify
