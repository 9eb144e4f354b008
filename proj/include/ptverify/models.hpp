#ifndef PTVERIFY_MODELS_HPP
#define PTVERIFY_MODELS_HPP

#include <array>
#include <utility>

#include "ptverify/linalg.hpp"

namespace ptverify {

/// Parameters of the 5-parameter family [[r e^{i theta}, t], [s, r e^{-i theta}]].
struct Params5 {
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
    double theta = 0.0;
};

/// Parameters of the 4-parameter family (t tied to s).
struct Params4 {
    double r = 0.0;
    double s = 0.0;
    double theta = 0.0;

    Params5 as_params5() const { return {r, s, s, theta}; }
};

/// The constraint angle: sin(alpha) * sqrt(s t) = r * sin(theta), principal
/// branch so cos(alpha) > 0 strictly in the unbroken phase.
struct AlphaAngle {
    double alpha = 0.0;
    double cos_alpha = 1.0;
    double sin_alpha = 0.0;
};

enum class PhaseKind { Unbroken, ExceptionalPoint, Broken };

/// Phase classification by the sign of the reality discriminant s t - r^2 sin^2 theta.
struct PhaseClass {
    PhaseKind kind = PhaseKind::Unbroken;
    double discriminant = 0.0;
};

const char* to_string(PhaseKind k);

/// Quantified failure of the candidate eigenpairs.
///
/// row_defects holds (H v - eps v)_k / v_k for k = row 1, row 2 of the plus
/// pair then of the minus pair; the imaginary parts reproduce the row-wise
/// imbalance (r sin theta - t sin alpha) and -(r sin theta - s sin alpha).
struct ResidualReport {
    double residual_plus = 0.0;
    double residual_minus = 0.0;
    std::array<Complex, 4> row_defects{};
    bool s_equals_t = false;
};

Matrix2 build_h5(const Params5& p);
Matrix2 build_h4(const Params4& p);

/// Reality discriminant and its tolerance-banded sign.
PhaseClass classify(const Params5& p);
PhaseClass classify(const Params4& p);

/// Constraint angle on the principal branch. Throws BrokenPhaseError /
/// ExceptionalPointError outside the unbroken phase (where the candidate
/// normalization 1/sqrt(2 cos alpha) degenerates).
AlphaAngle alpha_of(const Params5& p);
AlphaAngle alpha_of(const Params4& p);

/// Closed-form spectrum: real pair in the unbroken phase, conjugate pair in
/// the broken phase. First element carries the +sqrt branch.
std::pair<Complex, Complex> spectrum_h5(const Params5& p);

/// The candidate pair exactly as printed: v+ = (e^{i a/2}, e^{-i a/2}) and
/// v- = (e^{-i a/2}, -e^{i a/2}), both scaled by 1/sqrt(2 cos alpha). Note the
/// 2-norm^2 is 1/cos(alpha), not 1.
std::pair<Vector2, Vector2> candidate_vectors(const AlphaAngle& a);

/// Row-by-row defect of the candidate pairs against the closed-form
/// eigenvalues. Throws whatever alpha_of throws.
ResidualReport eigen_residuals(const Params5& p);
ResidualReport eigen_residuals(const Params4& p);

/// ||P conj(m) P - m||_F with P the exchange matrix: the witness of combined
/// parity/time-reversal invariance. Vanishes on the family iff s == t.
double pt_commutes(const Matrix2& m);

} // namespace ptverify

#endif
