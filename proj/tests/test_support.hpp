#ifndef PTVERIFY_TEST_SUPPORT_HPP
#define PTVERIFY_TEST_SUPPORT_HPP

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptverify/models.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ptverify::Complex random_complex(std::mt19937_64& rng, double amp = 2.0) {
    return {uniform(rng, -amp, amp), uniform(rng, -amp, amp)};
}

inline ptverify::Matrix2 random_matrix(std::mt19937_64& rng, double amp = 2.0) {
    return {random_complex(rng, amp), random_complex(rng, amp),
            random_complex(rng, amp), random_complex(rng, amp)};
}

inline ptverify::Vector2 random_unit_vector(std::mt19937_64& rng) {
    for (;;) {
        const ptverify::Vector2 v{random_complex(rng), random_complex(rng)};
        if (v.norm() > 0.1) return v.normalized();
    }
}

inline ptverify::Params4 random_params4(std::mt19937_64& rng) {
    return {uniform(rng, 0.0, 2.5), uniform(rng, 0.25, 2.5), uniform(rng, 0.0, M_PI)};
}

inline ptverify::Params4 random_params4_unbroken(std::mt19937_64& rng) {
    for (;;) {
        const ptverify::Params4 p = random_params4(rng);
        if (ptverify::classify(p).kind == ptverify::PhaseKind::Unbroken) return p;
    }
}

inline ptverify::Params5 random_params5(std::mt19937_64& rng) {
    return {uniform(rng, 0.0, 2.5), uniform(rng, 0.25, 2.5), uniform(rng, 0.25, 2.5),
            uniform(rng, 0.0, M_PI)};
}

inline ptverify::Params5 random_params5_unbroken(std::mt19937_64& rng) {
    for (;;) {
        const ptverify::Params5 p = random_params5(rng);
        if (ptverify::classify(p).kind == ptverify::PhaseKind::Unbroken) return p;
    }
}

inline bool close(ptverify::Complex actual, ptverify::Complex expected, double tol = 1e-12) {
    return std::abs(actual - expected) <= tol;
}

inline bool close(const ptverify::Matrix2& actual, const ptverify::Matrix2& expected,
                  double tol = 1e-12) {
    return (actual - expected).frobenius() <= tol;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace testsupport

#endif
