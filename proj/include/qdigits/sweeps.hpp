#pragma once

#include "qdigits/number_systems.hpp"

#include <string>

namespace qdigits {

enum class SweepKind { line_convergence, integral_convergence, ln3_series };

SweepKind parse_sweep_kind(const std::string &text);
std::string to_string(SweepKind kind);

struct SweepOptions {
    DigitSystem system = DigitSystem::ternary_symmetric();
    // Largest |D| compared in the line-convergence sweep.
    std::int64_t d_max = 4;
    // Evaluation point of the integral-convergence sweep.
    double x = 1.0;
};

// CSV with a header row.
//   line-convergence:     n_plus, max_abs_deviation, max_relative_deviation
//   integral-convergence: s_lo, value, abs_error, scaled_error (abs_error / 3^s_lo)
//   ln3-series:           K, partial, abs_error, scaled_error (K * abs_error)
std::string run_sweep(SweepKind kind, const SweepOptions &options);

} // namespace qdigits
