#include "ptverify/weak.hpp"

#include <algorithm>
#include <cmath>

namespace ptverify {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::RGreater: return "r>s";
        case Regime::SGreater: return "r<s";
        case Regime::Boundary: return "r=s";
    }
    return "?";
}

RegimeOperator regime_operator(const Params4& p) {
    if (!(std::isfinite(p.r) && std::isfinite(p.s) && std::isfinite(p.theta)))
        throw NonFiniteError("regime_operator: parameters must be finite");
    if (p.r < 0.0 || !(p.s > 0.0))
        throw InvalidInputError("regime_operator: requires r >= 0 and s > 0");

    RegimeOperator out;
    const bool boundary = std::abs(p.r - p.s) <= kEqualityTol * (p.r + p.s);
    const double big = std::max(p.r, p.s);
    const double small = std::min(p.r, p.s);
    const Complex phase = std::polar(small, p.theta);
    out.matrix = {Complex(big, 0.0), std::conj(phase), phase, Complex(big, 0.0)};
    if (boundary) {
        out.regime = Regime::Boundary;
        out.eigs = {p.r + p.s, 0.0};
    } else {
        out.regime = p.r > p.s ? Regime::RGreater : Regime::SGreater;
        out.eigs = {big + small, big - small};
    }
    return out;
}

double verify_polar_identity(const Params4& p) {
    const PolarFactors uf = polar(build_h4(p)); // throws SingularFactorError at r == s
    return (uf.r - regime_operator(p).matrix).frobenius();
}

WeakValueRecord weak_expectation(const Matrix2& h, const Vector2& psi) {
    if (!h.finite() || !psi.finite())
        throw NonFiniteError("weak_expectation: NaN/Inf input");
    if (std::abs(psi.norm2() - 1.0) > 1e-9)
        throw InvalidInputError("weak_expectation: psi must be normalized");

    const PolarFactors uf = polar(h);
    WeakValueRecord out;
    out.psi = psi;
    out.phi = uf.u.adjoint() * psi;
    out.overlap = inner(out.phi, psi);
    if (std::abs(out.overlap) <= kEqualityTol)
        throw OrthogonalPostSelectionError(
            "weak_expectation: post-selected state orthogonal to psi");
    out.weak_value = inner(out.phi, uf.r * psi) / out.overlap;
    out.reconstructed = out.weak_value * out.overlap;
    out.direct = inner(psi, h * psi);
    return out;
}

EquivalentH equivalent_h(const Params4& p) {
    const AlphaAngle a = alpha_of(p); // throws outside the unbroken phase
    const double diag = p.r * std::cos(p.theta);
    const double off = p.s * a.cos_alpha;
    EquivalentH out;
    out.matrix = {Complex(diag, 0.0), Complex(off, 0.0), Complex(off, 0.0), Complex(diag, 0.0)};
    out.lambda_plus = diag + off;
    out.lambda_minus = diag - off;
    return out;
}

namespace {

std::pair<double, double> sorted_real_spectrum(const Matrix2& m) {
    const EigenSystem2 eg = eigen2(m);
    double hi = eg.lambda1.real();
    double lo = eg.lambda2.real();
    if (hi < lo) std::swap(hi, lo);
    return {hi, lo};
}

} // namespace

double isospectral_gap(const Params4& p) {
    const EquivalentH h = equivalent_h(p);
    const auto [beta_plus, beta_minus] = sorted_real_spectrum(build_h4(p));
    double hi = h.lambda_plus;
    double lo = h.lambda_minus;
    if (hi < lo) std::swap(hi, lo);
    return std::max(std::abs(hi - beta_plus), std::abs(lo - beta_minus));
}

std::pair<double, double> regime_spectral_discrepancy(const Params4& p) {
    const AlphaAngle a = alpha_of(p); // unbroken phase required
    (void)a;
    const RegimeOperator reg = regime_operator(p);
    if (reg.regime == Regime::Boundary)
        throw SingularFactorError("regime_spectral_discrepancy: undefined at r == s");
    const auto [beta_plus, beta_minus] = sorted_real_spectrum(build_h4(p));
    return {std::abs(reg.eigs.first - beta_plus), std::abs(reg.eigs.second - beta_minus)};
}

double equiv_expectation(const Params4& p, Branch which) {
    const EquivalentH h = equivalent_h(p);
    const double sign = which == Branch::Plus ? 1.0 : -1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Vector2 phi{inv_sqrt2, sign * inv_sqrt2};
    return inner(phi, h.matrix * phi).real();
}

} // namespace ptverify
