#ifndef PTVERIFY_LINALG_HPP
#define PTVERIFY_LINALG_HPP

#include <complex>

#include "ptverify/errors.hpp"

namespace ptverify {

using Complex = std::complex<double>;

constexpr double kPredicateTol = 1e-10; // predicates (Hermitian, unitary, reconstruction)
constexpr double kEqualityTol = 1e-12;  // equality assertions (degeneracy, phase boundary)

/// Two-component complex vector.
struct Vector2 {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};

    double norm2() const { return std::norm(a) + std::norm(b); }
    double norm() const;
    bool finite() const;

    Vector2 operator+(const Vector2& o) const { return {a + o.a, b + o.b}; }
    Vector2 operator-(const Vector2& o) const { return {a - o.a, b - o.b}; }
    Vector2 operator*(Complex c) const { return {a * c, b * c}; }

    /// Unit vector in the same direction. Throws InvalidInputError on the zero vector.
    Vector2 normalized() const;
};

inline Vector2 operator*(Complex c, const Vector2& v) { return v * c; }

/// <x|y> with the physics convention: antilinear in the first slot.
Complex inner(const Vector2& x, const Vector2& y);

/// Dense complex 2x2 matrix, row-major fields.
struct Matrix2 {
    Complex m11{0.0, 0.0};
    Complex m12{0.0, 0.0};
    Complex m21{0.0, 0.0};
    Complex m22{0.0, 0.0};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex trace() const { return m11 + m22; }
    Complex det() const { return m11 * m22 - m12 * m21; }
    Matrix2 adjoint() const;
    Matrix2 conj() const;
    double frobenius() const;
    bool finite() const;

    Vector2 operator*(const Vector2& v) const;
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator+(const Matrix2& o) const;
    Matrix2 operator-(const Matrix2& o) const;
    Matrix2 operator*(Complex c) const;
};

inline Matrix2 operator*(Complex c, const Matrix2& m) { return m * c; }

/// |v><w| outer product.
Matrix2 outer(const Vector2& v, const Vector2& w);

/// Both eigenpairs of a 2x2 matrix.
///
/// `degenerate` marks a defective input (coalesced eigenvalues with a single
/// eigenvector); a scalar matrix is reported non-degenerate with the canonical
/// basis. Eigenvectors are unit 2-norm.
struct EigenSystem2 {
    Complex lambda1{0.0, 0.0};
    Complex lambda2{0.0, 0.0};
    Vector2 v1;
    Vector2 v2;
    bool degenerate = false;
};

/// Polar factors of a matrix: unitary u times Hermitian PSD r.
struct PolarFactors {
    Matrix2 u;
    Matrix2 r;
};

/// Closed-form eigendecomposition via the characteristic quadratic.
///
/// The larger-magnitude root is computed first and the other recovered from
/// det/lambda to avoid cancellation. Throws NonFiniteError on NaN/Inf entries.
EigenSystem2 eigen2(const Matrix2& m);

/// ||m - m^dagger||_F <= tol
bool is_hermitian(const Matrix2& m, double tol);

/// ||m^dagger m - I||_F <= tol
bool is_unitary(const Matrix2& m, double tol);

/// Unique PSD Hermitian square root, by spectral decomposition.
///
/// Eigenvalues in [-1e-10*(1+||m||), 0) are clamped to zero. Throws
/// NotHermitianError / NegativeEigenvalueError below those thresholds.
Matrix2 sqrt_psd(const Matrix2& m);

/// Polar decomposition h = u * r with r = sqrt_psd(h^dagger h), u = h * r^-1.
///
/// Throws SingularFactorError when the smallest eigenvalue of r is
/// <= 1e-12 * ||h||; use polar_completed for a total variant.
PolarFactors polar(const Matrix2& h);

/// Polar decomposition that never fails: on a singular r the unitary factor
/// is completed on the null space via the eigen-basis, so u*r == h still holds.
PolarFactors polar_completed(const Matrix2& h);

/// ||m*v - lam*v||_2 — the failure of a claimed eigenpair.
double residual_norm(const Matrix2& m, Complex lam, const Vector2& v);

namespace detail {

/// Spectrum of a Hermitian 2x2: real eigenvalues (descending) and a unit
/// eigenvector of the larger one. For a scalar matrix v_plus = (1, 0).
struct HermitianEigs {
    double lam_plus = 0.0;
    double lam_minus = 0.0;
    Vector2 v_plus;
    bool scalar = false; // both eigenvalues equal; any orthonormal basis works
};

HermitianEigs hermitian_eigs(const Matrix2& m);

/// Unit vector orthogonal to a given unit vector.
Vector2 orthogonal_complement(const Vector2& v);

} // namespace detail

} // namespace ptverify

#endif
