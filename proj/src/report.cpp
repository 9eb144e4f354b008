#include "ptverify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ptverify {

namespace {

double unordered_pair_gap(std::pair<Complex, Complex> a, std::pair<Complex, Complex> b) {
    const double direct = std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
    const double crossed = std::max(std::abs(a.first - b.second), std::abs(a.second - b.first));
    return std::min(direct, crossed);
}

std::string fmt(double x, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

std::string fmt(Complex z) {
    std::string out = fmt(z.real());
    out += z.imag() < 0.0 ? " - " : " + ";
    out += fmt(std::abs(z.imag()));
    out += "i";
    return out;
}

nlohmann::ordered_json json_complex(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

VerifyReport verify_impl(const Params5& p, bool is_h4) {
    VerifyReport rep;
    rep.model = is_h4 ? "h4" : "h5";
    rep.params = p;

    const Matrix2 h = build_h5(p);
    const double h_scale = 1.0 + h.frobenius();

    rep.phase = classify(p);
    rep.spectrum = spectrum_h5(p);
    rep.pt_witness = pt_commutes(h);

    const EigenSystem2 oracle = eigen2(h);
    rep.spectrum_oracle_gap =
        unordered_pair_gap(rep.spectrum, {oracle.lambda1, oracle.lambda2});
    if (rep.spectrum_oracle_gap > 1e-10)
        rep.violations.push_back("closed-form spectrum disagrees with the eigen2 oracle");

    const PolarFactors uf = polar_completed(h);
    rep.polar_reconstruction = (uf.u * uf.r - h).frobenius();
    rep.polar_unitarity = (uf.u.adjoint() * uf.u - Matrix2::identity()).frobenius();
    if (rep.polar_reconstruction > kPredicateTol * h_scale)
        rep.violations.push_back("polar reconstruction ||u r - h|| out of tolerance");
    if (rep.polar_unitarity > kPredicateTol)
        rep.violations.push_back("polar unitary factor out of tolerance");

    if (rep.phase.kind == PhaseKind::Unbroken) {
        rep.alpha = alpha_of(p);
        rep.residuals = eigen_residuals(p);
        if (rep.residuals->s_equals_t) {
            const double tol = kEqualityTol * h_scale;
            if (rep.residuals->residual_plus > tol || rep.residuals->residual_minus > tol)
                rep.violations.push_back("s == t but candidate residuals are not negligible");
        }
    } else {
        rep.notes.push_back(std::string(to_string(rep.phase.kind)) +
                            " phase: constraint-angle checks skipped");
    }

    if (is_h4) {
        const Params4 q{p.r, p.s, p.theta};
        rep.regime = regime_operator(q);
        if (rep.regime->regime == Regime::Boundary) {
            rep.notes.push_back("r == s boundary: positive factor singular, unitary completed");
        } else {
            rep.regime_identity = verify_polar_identity(q);
            if (*rep.regime_identity > kPredicateTol * (1.0 + p.r + p.s))
                rep.violations.push_back("regime operator differs from the polar factor");
        }
        if (rep.phase.kind == PhaseKind::Unbroken) {
            rep.isospectral_gap = isospectral_gap(q);
            if (*rep.isospectral_gap > kPredicateTol * (1.0 + p.r + p.s))
                rep.violations.push_back("surrogate spectrum drifted from the exact one");
            if (rep.regime->regime != Regime::Boundary)
                rep.regime_gaps = regime_spectral_discrepancy(q);
        }
    }

    // weak-value pipeline at the fixed probe state (1, 1)/sqrt(2)
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    try {
        const WeakValueRecord rec = weak_expectation(h, {inv_sqrt2, inv_sqrt2});
        rep.pipeline_error = std::abs(rec.reconstructed - rec.direct);
        rep.pipeline_direct = rec.direct;
        if (*rep.pipeline_error > kPredicateTol * (1.0 + std::abs(rec.direct)))
            rep.violations.push_back("weak-value pipeline fails to reproduce <psi|H|psi>");
    } catch (const Error& e) {
        rep.notes.push_back(std::string("pipeline skipped: ") + e.what());
    }

    return rep;
}

} // namespace

VerifyReport verify_point(const Params5& p) { return verify_impl(p, false); }

VerifyReport verify_point(const Params4& p) { return verify_impl(p.as_params5(), true); }

std::string render_table(const VerifyReport& rep) {
    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& value) {
        os << "  " << key;
        for (std::size_t i = key.size(); i < 24; ++i) os << ' ';
        os << value << '\n';
    };

    os << "model " << rep.model << '\n';
    row("r", fmt(rep.params.r));
    row("s", fmt(rep.params.s));
    if (rep.model == "h5") row("t", fmt(rep.params.t));
    row("theta", fmt(rep.params.theta));
    row("phase", to_string(rep.phase.kind));
    row("discriminant", fmt(rep.phase.discriminant));
    row("spectrum", fmt(rep.spectrum.first) + " , " + fmt(rep.spectrum.second));
    row("spectrum vs oracle", fmt(rep.spectrum_oracle_gap, "%.3g"));
    row("pt witness", fmt(rep.pt_witness));
    row("polar ||ur - h||", fmt(rep.polar_reconstruction, "%.3g"));
    row("polar ||u+u - 1||", fmt(rep.polar_unitarity, "%.3g"));
    if (rep.alpha) {
        row("alpha", fmt(rep.alpha->alpha));
        row("cos(alpha)", fmt(rep.alpha->cos_alpha));
    }
    if (rep.residuals) {
        row("residual+", fmt(rep.residuals->residual_plus));
        row("residual-", fmt(rep.residuals->residual_minus));
        row("s == t", rep.residuals->s_equals_t ? "yes" : "no");
    }
    if (rep.regime) {
        row("regime", to_string(rep.regime->regime));
        row("regime eigenvalues",
            fmt(rep.regime->eigs.first) + " , " + fmt(rep.regime->eigs.second));
    }
    if (rep.regime_identity) row("regime vs polar", fmt(*rep.regime_identity, "%.3g"));
    if (rep.isospectral_gap) row("isospectral gap", fmt(*rep.isospectral_gap, "%.3g"));
    if (rep.regime_gaps)
        row("regime gaps",
            fmt(rep.regime_gaps->first) + " , " + fmt(rep.regime_gaps->second));
    if (rep.pipeline_direct) row("direct <psi|H|psi>", fmt(*rep.pipeline_direct));
    if (rep.pipeline_error) row("pipeline error", fmt(*rep.pipeline_error, "%.3g"));
    for (const auto& n : rep.notes) os << "  note: " << n << '\n';
    for (const auto& v : rep.violations) os << "  VIOLATION: " << v << '\n';
    os << (rep.contracts_ok() ? "all contracts hold" : "contract violations detected") << '\n';
    return os.str();
}

std::string render_json(const VerifyReport& rep) {
    nlohmann::ordered_json j;
    j["model"] = rep.model;
    j["params"]["r"] = rep.params.r;
    j["params"]["s"] = rep.params.s;
    if (rep.model == "h5") j["params"]["t"] = rep.params.t;
    j["params"]["theta"] = rep.params.theta;
    j["phase"] = to_string(rep.phase.kind);
    j["discriminant"] = rep.phase.discriminant;
    j["spectrum"] = {json_complex(rep.spectrum.first), json_complex(rep.spectrum.second)};
    j["spectrum_oracle_gap"] = rep.spectrum_oracle_gap;
    j["pt_witness"] = rep.pt_witness;
    j["polar_reconstruction"] = rep.polar_reconstruction;
    j["polar_unitarity"] = rep.polar_unitarity;
    j["alpha"] = rep.alpha ? nlohmann::ordered_json(rep.alpha->alpha) : nullptr;
    j["cos_alpha"] = rep.alpha ? nlohmann::ordered_json(rep.alpha->cos_alpha) : nullptr;
    if (rep.residuals) {
        j["residual_plus"] = rep.residuals->residual_plus;
        j["residual_minus"] = rep.residuals->residual_minus;
        nlohmann::ordered_json defects = nlohmann::ordered_json::array();
        for (const auto& d : rep.residuals->row_defects) defects.push_back(json_complex(d));
        j["row_defects"] = defects;
        j["s_equals_t"] = rep.residuals->s_equals_t;
    } else {
        j["residual_plus"] = nullptr;
        j["residual_minus"] = nullptr;
        j["row_defects"] = nullptr;
        j["s_equals_t"] = nullptr;
    }
    j["regime"] = rep.regime ? nlohmann::ordered_json(to_string(rep.regime->regime)) : nullptr;
    j["regime_eigs"] = rep.regime
        ? nlohmann::ordered_json({rep.regime->eigs.first, rep.regime->eigs.second})
        : nullptr;
    j["regime_identity"] = rep.regime_identity ? nlohmann::ordered_json(*rep.regime_identity)
                                               : nullptr;
    j["isospectral_gap"] = rep.isospectral_gap ? nlohmann::ordered_json(*rep.isospectral_gap)
                                               : nullptr;
    j["regime_gap_plus"] =
        rep.regime_gaps ? nlohmann::ordered_json(rep.regime_gaps->first) : nullptr;
    j["regime_gap_minus"] =
        rep.regime_gaps ? nlohmann::ordered_json(rep.regime_gaps->second) : nullptr;
    j["pipeline_direct"] = rep.pipeline_direct ? json_complex(*rep.pipeline_direct)
                                               : nlohmann::ordered_json(nullptr);
    j["pipeline_error"] =
        rep.pipeline_error ? nlohmann::ordered_json(*rep.pipeline_error) : nullptr;
    j["notes"] = rep.notes;
    j["violations"] = rep.violations;
    j["contracts_ok"] = rep.contracts_ok();
    return j.dump(2) + "\n";
}

} // namespace ptverify
