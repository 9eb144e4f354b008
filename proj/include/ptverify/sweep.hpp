#ifndef PTVERIFY_SWEEP_HPP
#define PTVERIFY_SWEEP_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "ptverify/models.hpp"

namespace ptverify {

/// Inclusive linear grid; steps == 1 collapses to the minimum.
struct Range {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    bool valid() const { return steps >= 1 && min <= max; }
    double at(int i) const {
        return steps == 1 ? min : min + (max - min) * static_cast<double>(i) /
                                            static_cast<double>(steps - 1);
    }
};

enum class SweepModel { H5, H4 };

/// Grid sweep over the model parameters, row-major in declared order
/// (r, s, t, theta); the t range is ignored for the 4-parameter model.
struct SweepSpec {
    SweepModel model = SweepModel::H4;
    Range r;
    Range s;
    Range t;
    Range theta;

    bool valid() const;
    std::uint64_t rows() const;
};

/// One computed grid row, already formatted as CSV fields (17 significant
/// digits, '.' decimal separator). Not-applicable cells are empty.
std::string sweep_csv_header(SweepModel model);
std::string sweep_csv_row(SweepModel model, const Params5& p);

/// Writes header plus one row per grid point in deterministic row-major
/// order. Rows are evaluated in parallel; the output order never changes.
void run_sweep(const SweepSpec& spec, std::ostream& out);

/// Format a double with 17 significant digits (lossless round-trip).
std::string format_full(double x);

} // namespace ptverify

#endif
