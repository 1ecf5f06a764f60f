#include "qdigits/number_systems.hpp"

#include "qdigits/errors.hpp"

#include <cmath>

namespace qdigits {

namespace {

using real = long double;

constexpr real ln3 = 1.098612288668109691395245236922525704647L;
constexpr real direct_limit = 2.0e6L;

real digit_of(real m) {
    return std::fmod(m, 3.0L);
}

// H_L - H_{floor(L/3)}
real harmonic_window(real L) {
    const real L3 = std::floor(L / 3.0L);
    if (L <= direct_limit) {
        real sum = 0.0L;
        for (real m = L; m > L3; m -= 1.0L) {
            sum += 1.0L / m;
        }
        return sum;
    }
    const real rem = L - 3.0L * L3;
    const real lead = ln3 + std::log1p(rem / (3.0L * L3));
    const auto tail = [](real n) { return 1.0L / (2.0L * n) - 1.0L / (12.0L * n * n); };
    return lead + tail(L) - tail(L3);
}

// Integral of t_ns(s, x) 3^s over [a, log3 x] for x > 0; zero when a >= log3 x.
real upper_integral(real x, real a) {
    const real u = x * std::pow(3.0L, -a);
    if (u <= 1.0L) {
        return 0.0L;
    }
    const real M = std::floor(u);
    const real L = M - 1.0L;
    real full = 0.0L;
    if (L >= 1.0L) {
        full = harmonic_window(L) - digit_of(L) / (L + 1.0L);
    }
    const real partial = digit_of(M) * (1.0L / M - 1.0L / u);
    return x * (full + partial) / ln3;
}

// Integral of t_ns(s, x) 3^s over [a, b] for any nonzero x.
real window_integral(real x, real a, real b) {
    if (x > 0) {
        return upper_integral(x, a) - upper_integral(x, b);
    }
    const real complement = 2.0L * (std::pow(3.0L, b) - std::pow(3.0L, a)) / ln3;
    return complement - window_integral(-x, a, b);
}

} // namespace

double ternary_integral(double x, double s_lo) {
    if (!(x > 0.0)) {
        throw DomainError("ternary_integral needs x > 0; use renorm_integral_signed for other values");
    }
    return static_cast<double>(upper_integral(x, s_lo));
}

double renorm_integral_signed(double x, double s_lo, double s_hi) {
    if (x == 0.0) {
        return 0.0;
    }
    if (!(s_hi > s_lo)) {
        throw DomainError("renorm_integral_signed needs s_lo < s_hi");
    }
    const real shifted = 3.0L * window_integral(x, s_lo - 1.0L, s_hi - 1.0L);
    return static_cast<double>(0.5L * (shifted - window_integral(x, s_lo, s_hi)));
}

double ln3_series_partial(std::int64_t K) {
    if (K < 1) {
        throw DomainError("ln3_series_partial needs K >= 1");
    }
    real sum = 0.0L;
    for (std::int64_t k = K; k >= 1; --k) {
        const auto kk = static_cast<real>(k);
        sum += 1.0L / (3.0L * kk - 2.0L) + 1.0L / (3.0L * kk - 1.0L) - 2.0L / (3.0L * kk);
    }
    return static_cast<double>(sum);
}

} // namespace qdigits
