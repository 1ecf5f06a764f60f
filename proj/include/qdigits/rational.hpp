#pragma once

// Exact rational arithmetic used wherever digit boundaries must be decided
// without rounding. Backed by Boost.Multiprecision's arbitrary precision
// rationals; everything else in the library goes through these helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace qdigits {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return den < 0 ? Rational(-BigInt(num), -BigInt(den)) : Rational(BigInt(num), BigInt(den));
}

BigInt numerator_of(const Rational &x);
BigInt denominator_of(const Rational &x);

// Floor division toward negative infinity.
BigInt floor_of(const Rational &x);

// Non-negative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt &a, const BigInt &m);

// q^e for any integer e (negative exponents give 1/q^|e|).
Rational power(int q, int e);
BigInt int_power(int q, unsigned e);
std::int64_t ipow(std::int64_t q, unsigned e);

// True iff the reduced denominator of x is a power of q.
bool is_q_adic(const Rational &x, int q);

// Smallest k >= 0 with x * q^k an integer; only meaningful when is_q_adic.
int q_adic_depth(const Rational &x, int q);

double to_double(const Rational &x);

// Floating input snapped to the nearest rational with denominator q^64.
Rational snap_to_rational(double x, int q);

// Parses "a", "-a/b" or a decimal literal ("0.25"). Decimal literals are
// parsed exactly as base-10 fractions.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &x);

// e^{2 pi i turns}, with turns reduced exactly modulo 1 before conversion.
std::complex<double> unit_phase(const Rational &turns);
std::complex<double> unit_phase(std::int64_t num, std::int64_t den);

// sin(pi * num / den) with num reduced modulo 2*den first.
double sin_pi(std::int64_t num, std::int64_t den);

} // namespace qdigits
