#ifndef PTVERIFY_REPORT_HPP
#define PTVERIFY_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptverify/weak.hpp"

namespace ptverify {

/// Aggregated single-point verification: every check that applies at the
/// given parameters. Fields are absent (with a note) where the phase or the
/// r == s boundary makes them undefined.
struct VerifyReport {
    std::string model; // "h5" or "h4"
    Params5 params;    // t == s when model == "h4"

    PhaseClass phase;
    std::pair<Complex, Complex> spectrum;
    double spectrum_oracle_gap = 0.0; // closed form vs eigen2, unordered match
    double pt_witness = 0.0;
    double polar_reconstruction = 0.0; // ||u r - h||_F, completed at r == s
    double polar_unitarity = 0.0;      // ||u^dag u - I||_F

    std::optional<AlphaAngle> alpha;
    std::optional<ResidualReport> residuals;
    std::optional<RegimeOperator> regime;      // h4 only
    std::optional<double> regime_identity;     // h4, r != s
    std::optional<double> isospectral_gap;     // h4, unbroken
    std::optional<std::pair<double, double>> regime_gaps; // h4, unbroken, r != s
    std::optional<double> pipeline_error;      // |reconstructed - direct|, psi = (1,1)/sqrt 2
    std::optional<Complex> pipeline_direct;

    std::vector<std::string> notes;      // reasons for absent fields
    std::vector<std::string> violations; // failed numeric contracts

    bool contracts_ok() const { return violations.empty(); }
};

VerifyReport verify_point(const Params5& p);
VerifyReport verify_point(const Params4& p);

std::string render_table(const VerifyReport& rep);
std::string render_json(const VerifyReport& rep);

} // namespace ptverify

#endif
