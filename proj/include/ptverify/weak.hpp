#ifndef PTVERIFY_WEAK_HPP
#define PTVERIFY_WEAK_HPP

#include <utility>

#include "ptverify/models.hpp"

namespace ptverify {

enum class Regime { RGreater, SGreater, Boundary };

const char* to_string(Regime r);

/// The regime-split positive operator: [[r, s e^{-i theta}], [s e^{i theta}, r]]
/// for r > s (eigenvalues r +- s), the r/s-swapped form for r < s
/// (eigenvalues s +- r). At r == s the first form is returned, labeled
/// Boundary, with eigenvalues (r + s, 0).
struct RegimeOperator {
    Matrix2 matrix;
    Regime regime = Regime::RGreater;
    std::pair<double, double> eigs{0.0, 0.0};
};

/// The single Hermitian surrogate [[r cos theta, s cos alpha], [s cos alpha,
/// r cos theta]] sharing the unbroken spectrum of the 4-parameter model.
struct EquivalentH {
    Matrix2 matrix;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
};

/// One pass of the weak-value expectation pipeline for h = u r.
struct WeakValueRecord {
    Vector2 psi;
    Vector2 phi;          // u^dagger psi
    Complex weak_value;   // <phi|r|psi> / <phi|psi>
    Complex overlap;      // <phi|psi>
    Complex reconstructed; // weak_value * overlap
    Complex direct;       // <psi|h|psi>
};

RegimeOperator regime_operator(const Params4& p);

/// ||polar(h).r - regime_operator.matrix||_F: the regime operators ARE the
/// PSD polar factor in their regimes. Throws SingularFactorError at r == s.
double verify_polar_identity(const Params4& p);

/// Runs the pipeline and checks that weak_value * overlap reproduces the
/// direct expectation. psi must be normalized. Throws SingularFactorError,
/// OrthogonalPostSelectionError.
WeakValueRecord weak_expectation(const Matrix2& h, const Vector2& psi);

/// Builds the surrogate; lambda_pm = r cos theta +- s cos alpha. Propagates
/// BrokenPhaseError / ExceptionalPointError.
EquivalentH equivalent_h(const Params4& p);

/// max over +- of |lambda_pm(equivalent_h) - beta_pm|, both spectra sorted
/// descending, with beta from the eigen2 oracle on the 4-parameter matrix.
double isospectral_gap(const Params4& p);

/// (|lambda_+(regime) - beta_+|, |lambda_-(regime) - beta_-|), both spectra
/// sorted descending: the error a regime-operator measurement incurs. Throws
/// BrokenPhaseError / ExceptionalPointError / SingularFactorError (r == s).
std::pair<double, double> regime_spectral_discrepancy(const Params4& p);

enum class Branch { Plus, Minus };

/// <Phi|h|Phi> with Phi = (1, +-1)/sqrt(2), the exact eigenvectors of the
/// real-symmetric surrogate; equals lambda_pm.
double equiv_expectation(const Params4& p, Branch which);

} // namespace ptverify

#endif
