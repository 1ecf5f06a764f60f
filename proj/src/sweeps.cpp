#include "qdigits/sweeps.hpp"

#include "qdigits/digit_operators.hpp"
#include "qdigits/errors.hpp"

#include <cmath>
#include <sstream>

namespace qdigits {

namespace {

std::string line_convergence(const SweepOptions &options) {
    const DigitSystem system = options.system;
    const ShiftExpansion line = line_expansion_coefficients(system, 0, options.d_max);
    const int max_n_plus = system.base == 2 ? 28 : 16;
    std::ostringstream out;
    out.precision(17);
    out << "n_plus,max_abs_deviation,max_relative_deviation\n";
    for (int n_plus = 2; n_plus <= max_n_plus; n_plus += 2) {
        double worst = 0.0;
        double worst_rel = 0.0;
        for (const ShiftTerm &t : line.terms) {
            const Rational m = t.amount * Rational(system.base);
            const auto mi = numerator_of(m).convert_to<std::int64_t>();
            const std::int64_t D = (mi - mod_floor(BigInt(mi), system.base).convert_to<std::int64_t>()) / system.base;
            const int sigma = static_cast<int>(mi - system.base * D);
            const complex lattice = lattice_momentum_coefficient(n_plus, system, 0, D, sigma);
            const double dev = std::abs(lattice - t.coefficient);
            worst = std::max(worst, dev);
            worst_rel = std::max(worst_rel, dev / std::abs(t.coefficient));
        }
        out << n_plus << ',' << worst << ',' << worst_rel << '\n';
    }
    return out.str();
}

std::string integral_convergence(const SweepOptions &options) {
    std::ostringstream out;
    out.precision(17);
    out << "s_lo,value,abs_error,scaled_error\n";
    for (int s_lo = -5; s_lo >= -40; s_lo -= 5) {
        const double value = ternary_integral(options.x, s_lo);
        const double err = std::abs(value - options.x);
        out << s_lo << ',' << value << ',' << err << ',' << err / std::pow(3.0, s_lo) << '\n';
    }
    return out.str();
}

std::string ln3_series() {
    std::ostringstream out;
    out.precision(17);
    out << "K,partial,abs_error,scaled_error\n";
    for (std::int64_t K = 10; K <= 1000000; K *= 10) {
        const double partial = ln3_series_partial(K);
        const double err = std::abs(partial - std::log(3.0));
        out << K << ',' << partial << ',' << err << ',' << static_cast<double>(K) * err << '\n';
    }
    return out.str();
}

} // namespace

SweepKind parse_sweep_kind(const std::string &text) {
    if (text == "line-convergence") {
        return SweepKind::line_convergence;
    }
    if (text == "integral-convergence") {
        return SweepKind::integral_convergence;
    }
    if (text == "ln3-series") {
        return SweepKind::ln3_series;
    }
    throw std::invalid_argument("unknown sweep '" + text + "'");
}

std::string to_string(SweepKind kind) {
    switch (kind) {
    case SweepKind::line_convergence:
        return "line-convergence";
    case SweepKind::integral_convergence:
        return "integral-convergence";
    case SweepKind::ln3_series:
        return "ln3-series";
    }
    return "unknown";
}

std::string run_sweep(SweepKind kind, const SweepOptions &options) {
    switch (kind) {
    case SweepKind::line_convergence:
        if (options.d_max < 1) {
            throw DomainError("line-convergence needs d_max >= 1");
        }
        return line_convergence(options);
    case SweepKind::integral_convergence:
        if (!(options.x > 0.0)) {
            throw DomainError("integral-convergence needs x > 0");
        }
        return integral_convergence(options);
    case SweepKind::ln3_series:
        return ln3_series();
    }
    throw std::invalid_argument("unhandled sweep kind");
}

} // namespace qdigits
