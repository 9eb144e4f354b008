#include "ptverify/models.hpp"

#include <cmath>

namespace ptverify {

namespace {

void require_finite(const Params5& p, const char* who) {
    if (!(std::isfinite(p.r) && std::isfinite(p.s) && std::isfinite(p.t) &&
          std::isfinite(p.theta)))
        throw NonFiniteError(std::string(who) + ": parameters must be finite");
}

} // namespace

const char* to_string(PhaseKind k) {
    switch (k) {
        case PhaseKind::Unbroken: return "unbroken";
        case PhaseKind::ExceptionalPoint: return "exceptional";
        case PhaseKind::Broken: return "broken";
    }
    return "?";
}

Matrix2 build_h5(const Params5& p) {
    require_finite(p, "build_h5");
    const Complex phase = std::polar(p.r, p.theta);
    return {phase, Complex(p.t, 0.0), Complex(p.s, 0.0), std::conj(phase)};
}

Matrix2 build_h4(const Params4& p) { return build_h5(p.as_params5()); }

PhaseClass classify(const Params5& p) {
    require_finite(p, "classify");
    const double rsin = p.r * std::sin(p.theta);
    const double disc = p.s * p.t - rsin * rsin;
    const double band = kEqualityTol * (1.0 + p.r * p.r + std::abs(p.s * p.t));
    PhaseClass out;
    out.discriminant = disc;
    if (disc > band)
        out.kind = PhaseKind::Unbroken;
    else if (disc < -band)
        out.kind = PhaseKind::Broken;
    else
        out.kind = PhaseKind::ExceptionalPoint;
    return out;
}

PhaseClass classify(const Params4& p) { return classify(p.as_params5()); }

AlphaAngle alpha_of(const Params5& p) {
    const PhaseClass ph = classify(p);
    if (ph.kind == PhaseKind::Broken)
        throw BrokenPhaseError("alpha_of: broken phase, the constraint has no real solution");
    if (ph.kind == PhaseKind::ExceptionalPoint)
        throw ExceptionalPointError("alpha_of: exceptional point, cos(alpha) = 0");

    // unbroken guarantees s t > 0, so sqrt(s t) is real
    const double root_st = std::sqrt(p.s * p.t);
    AlphaAngle out;
    out.sin_alpha = p.r * std::sin(p.theta) / root_st;
    out.cos_alpha = std::sqrt(std::max(1.0 - out.sin_alpha * out.sin_alpha, 0.0));
    out.alpha = std::asin(out.sin_alpha);
    return out;
}

AlphaAngle alpha_of(const Params4& p) { return alpha_of(p.as_params5()); }

std::pair<Complex, Complex> spectrum_h5(const Params5& p) {
    require_finite(p, "spectrum_h5");
    const double rcos = p.r * std::cos(p.theta);
    const double rsin = p.r * std::sin(p.theta);
    const double disc = p.s * p.t - rsin * rsin;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return {Complex(rcos + root, 0.0), Complex(rcos - root, 0.0)};
    }
    const double root = std::sqrt(-disc);
    return {Complex(rcos, root), Complex(rcos, -root)};
}

std::pair<Vector2, Vector2> candidate_vectors(const AlphaAngle& a) {
    if (!(a.cos_alpha > 0.0))
        throw InvalidInputError("candidate_vectors: requires cos(alpha) > 0");
    const double norm = 1.0 / std::sqrt(2.0 * a.cos_alpha);
    const Complex half = std::polar(1.0, 0.5 * a.alpha);
    const Vector2 plus{norm * half, norm * std::conj(half)};
    const Vector2 minus{norm * std::conj(half), -norm * half};
    return {plus, minus};
}

ResidualReport eigen_residuals(const Params5& p) {
    const AlphaAngle a = alpha_of(p);
    const Matrix2 h = build_h5(p);
    const auto [eps_plus, eps_minus] = spectrum_h5(p);
    const auto [v_plus, v_minus] = candidate_vectors(a);

    const Vector2 d_plus = h * v_plus - eps_plus * v_plus;
    const Vector2 d_minus = h * v_minus - eps_minus * v_minus;

    ResidualReport out;
    out.residual_plus = d_plus.norm();
    out.residual_minus = d_minus.norm();
    out.row_defects = {d_plus.a / v_plus.a, d_plus.b / v_plus.b,
                       d_minus.a / v_minus.a, d_minus.b / v_minus.b};
    out.s_equals_t = std::abs(p.s - p.t) <= kEqualityTol * (1.0 + std::abs(p.s) + std::abs(p.t));
    return out;
}

ResidualReport eigen_residuals(const Params4& p) { return eigen_residuals(p.as_params5()); }

double pt_commutes(const Matrix2& m) {
    if (!m.finite()) throw NonFiniteError("pt_commutes: matrix has NaN/Inf entries");
    // P conj(m) P swaps both indices and conjugates every entry
    const Matrix2 transformed{std::conj(m.m22), std::conj(m.m21),
                              std::conj(m.m12), std::conj(m.m11)};
    return (transformed - m).frobenius();
}

} // namespace ptverify
