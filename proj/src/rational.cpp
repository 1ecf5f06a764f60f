#include "qdigits/rational.hpp"

#include "qdigits/errors.hpp"

#include <cmath>
#include <numbers>

namespace qdigits {

BigInt numerator_of(const Rational &x) {
    return boost::multiprecision::numerator(x);
}

BigInt denominator_of(const Rational &x) {
    return boost::multiprecision::denominator(x);
}

BigInt floor_of(const Rational &x) {
    const BigInt num = numerator_of(x);
    const BigInt den = denominator_of(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

BigInt mod_floor(const BigInt &a, const BigInt &m) {
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

BigInt int_power(int q, unsigned e) {
    return boost::multiprecision::pow(BigInt(q), e);
}

std::int64_t ipow(std::int64_t q, unsigned e) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= q;
    }
    return r;
}

Rational power(int q, int e) {
    if (e >= 0) {
        return Rational(int_power(q, static_cast<unsigned>(e)));
    }
    return Rational(BigInt(1), int_power(q, static_cast<unsigned>(-e)));
}

bool is_q_adic(const Rational &x, int q) {
    BigInt den = denominator_of(x);
    while (den % q == 0) {
        den /= q;
    }
    return den == 1;
}

int q_adic_depth(const Rational &x, int q) {
    BigInt den = denominator_of(x);
    int k = 0;
    while (den % q == 0) {
        den /= q;
        ++k;
    }
    return k;
}

double to_double(const Rational &x) {
    return x.convert_to<double>();
}

Rational snap_to_rational(double x, int q) {
    if (!std::isfinite(x)) {
        throw UnsupportedOperand("cannot snap a non-finite value to a rational");
    }
    const Rational exact(x);
    const BigInt scale = int_power(q, 64);
    const Rational scaled = exact * Rational(scale) + Rational(BigInt(1), BigInt(2));
    return Rational(floor_of(scaled), scale);
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    try {
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            const BigInt num(s.substr(0, slash));
            const BigInt den(s.substr(slash + 1));
            if (den == 0) {
                throw std::invalid_argument("zero denominator");
            }
            return den < 0 ? Rational(-num, -den) : Rational(num, den);
        }
        if (const auto dot = s.find('.'); dot != std::string::npos) {
            bool negative = !s.empty() && s[0] == '-';
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole == "-" || whole == "+" || whole.empty()) {
                whole += "0";
            }
            const BigInt w(whole);
            if (frac.empty()) {
                return Rational(w);
            }
            const BigInt f(frac);
            const BigInt scale = int_power(10, static_cast<unsigned>(frac.size()));
            Rational r = Rational(boost::multiprecision::abs(w)) + Rational(f, scale);
            return negative ? -r : r;
        }
        return Rational(BigInt(s));
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

std::string to_string(const Rational &x) {
    if (denominator_of(x) == 1) {
        return numerator_of(x).str();
    }
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

namespace {

std::complex<double> quarter_turn(int k) {
    constexpr std::complex<double> values[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return values[k];
}

} // namespace

std::complex<double> unit_phase(const Rational &turns) {
    const Rational frac = turns - Rational(floor_of(turns));
    if (denominator_of(frac * 4) == 1) {
        return quarter_turn(numerator_of(frac * 4).convert_to<int>());
    }
    const double angle = 2.0 * std::numbers::pi * to_double(frac);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
    std::int64_t r = num % den;
    if (r < 0) {
        r += den;
    }
    if ((4 * r) % den == 0) {
        return quarter_turn(static_cast<int>(4 * r / den));
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

double sin_pi(std::int64_t num, std::int64_t den) {
    const std::int64_t period = 2 * den;
    std::int64_t r = num % period;
    if (r < 0) {
        r += period;
    }
    // Fold into [-den/2, den/2] around the nearest zero.
    double sign = 1.0;
    if (r >= den) {
        r -= den;
        sign = -1.0;
    }
    if (2 * r > den) {
        r = den - r;
    }
    return sign * std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

} // namespace qdigits
