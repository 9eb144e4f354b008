#include "ptverify/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>
#include <vector>

#include "ptverify/weak.hpp"

namespace ptverify {

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

bool SweepSpec::valid() const {
    const bool t_ok = model == SweepModel::H4 || t.valid();
    return r.valid() && s.valid() && t_ok && theta.valid();
}

std::uint64_t SweepSpec::rows() const {
    std::uint64_t n = static_cast<std::uint64_t>(r.steps) * s.steps * theta.steps;
    if (model == SweepModel::H5) n *= static_cast<std::uint64_t>(t.steps);
    return n;
}

std::string sweep_csv_header(SweepModel model) {
    return model == SweepModel::H5
               ? "r,s,t,theta,discriminant,phase,residual_plus,residual_minus,"
                 "isospectral_gap,regime_gap_plus,regime_gap_minus"
               : "r,s,theta,discriminant,phase,residual_plus,residual_minus,"
                 "isospectral_gap,regime_gap_plus,regime_gap_minus";
}

std::string sweep_csv_row(SweepModel model, const Params5& p) {
    const PhaseClass ph = classify(p);

    std::string res_plus, res_minus, iso, gap_plus, gap_minus;
    if (ph.kind == PhaseKind::Unbroken) {
        const ResidualReport rr = eigen_residuals(p);
        res_plus = format_full(rr.residual_plus);
        res_minus = format_full(rr.residual_minus);
        if (model == SweepModel::H4) {
            const Params4 q{p.r, p.s, p.theta};
            iso = format_full(isospectral_gap(q));
            if (regime_operator(q).regime != Regime::Boundary) {
                const auto gaps = regime_spectral_discrepancy(q);
                gap_plus = format_full(gaps.first);
                gap_minus = format_full(gaps.second);
            }
        }
    }

    std::string row = format_full(p.r) + "," + format_full(p.s) + ",";
    if (model == SweepModel::H5) row += format_full(p.t) + ",";
    row += format_full(p.theta) + "," + format_full(ph.discriminant) + "," +
           to_string(ph.kind) + "," + res_plus + "," + res_minus + "," + iso + "," +
           gap_plus + "," + gap_minus;
    return row;
}

namespace {

Params5 grid_point(const SweepSpec& spec, std::uint64_t index) {
    const std::uint64_t n_theta = spec.theta.steps;
    const std::uint64_t n_t = spec.model == SweepModel::H5 ? spec.t.steps : 1;
    const std::uint64_t n_s = spec.s.steps;

    const int i_theta = static_cast<int>(index % n_theta);
    index /= n_theta;
    const int i_t = static_cast<int>(index % n_t);
    index /= n_t;
    const int i_s = static_cast<int>(index % n_s);
    const int i_r = static_cast<int>(index / n_s);

    Params5 p;
    p.r = spec.r.at(i_r);
    p.s = spec.s.at(i_s);
    p.t = spec.model == SweepModel::H5 ? spec.t.at(i_t) : p.s;
    p.theta = spec.theta.at(i_theta);
    return p;
}

} // namespace

void run_sweep(const SweepSpec& spec, std::ostream& out) {
    if (!spec.valid()) throw InvalidInputError("run_sweep: invalid ranges");

    out << sweep_csv_header(spec.model) << '\n';

    const std::uint64_t total = spec.rows();
    const std::uint64_t block = 8192;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<std::string> rows;
    for (std::uint64_t start = 0; start < total; start += block) {
        const std::uint64_t count = std::min(block, total - start);
        rows.assign(count, {});

        auto compute = [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t k = lo; k < hi; ++k)
                rows[k] = sweep_csv_row(spec.model, grid_point(spec, start + k));
        };
        if (workers == 1 || count < 2 * workers) {
            compute(0, count);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (count + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t lo = w * chunk;
                if (lo >= count) break;
                pool.emplace_back(compute, lo, std::min(lo + chunk, count));
            }
            for (auto& th : pool) th.join();
        }
        for (const auto& row : rows) out << row << '\n';
    }
}

} // namespace ptverify
