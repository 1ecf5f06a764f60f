#pragma once

#include "qdigits/lattice_spec.hpp"
#include "qdigits/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdigits {

enum class Flavor { symmetric, nonsymmetric };

struct DigitSystem {
    int base = 3;
    Flavor flavor = Flavor::symmetric;

    static constexpr DigitSystem binary_symmetric() { return {2, Flavor::symmetric}; }
    static constexpr DigitSystem binary_nonsymmetric() { return {2, Flavor::nonsymmetric}; }
    static constexpr DigitSystem ternary_symmetric() { return {3, Flavor::symmetric}; }
    static constexpr DigitSystem ternary_nonsymmetric() { return {3, Flavor::nonsymmetric}; }

    bool symmetric() const noexcept { return flavor == Flavor::symmetric; }

    friend bool operator==(const DigitSystem &, const DigitSystem &) = default;
};

// All four systems, binary first.
std::vector<DigitSystem> all_digit_systems();

std::string to_string(DigitSystem system);
Flavor parse_flavor(const std::string &text);

// Digit alphabet in increasing order:
//   binary ns {0,1}, binary sym {-1/2,1/2}, ternary ns {0,1,2}, ternary sym {-1,0,1}.
std::vector<Rational> alphabet(DigitSystem system);

// Digit carried by every position far below the last nonzero one (the value at x = 0).
Rational tail_value(DigitSystem system);

// s-th digit of x on the real line. Plateaus are left-closed:
//   nonsymmetric       floor(x / q^s) mod q
//   ternary symmetric  balanced digit of round-half-up(x / 3^s)
//   binary symmetric   b_ns(s, x) - 1/2
Rational digit(DigitSystem system, int s, const Rational &x);

// Same digit for the integer lattice index k, taken at position j >= 0 counted
// from the lowest lattice digit (j = s + n_minus). On a half-step lattice the
// binary symmetric digit of (k + 1/2) dx is b_ns(j, k) - 1/2. Returned as a double.
double lattice_digit(DigitSystem system, int j, std::int64_t k);

struct DigitSequence {
    DigitSystem system;
    int s_min = 0;
    int s_max = -1;
    std::vector<Rational> digits; // digits[s - s_min]

    // Digit at s; positions outside the stored range give the tail value.
    Rational at(int s) const;
};

DigitSequence expand(DigitSystem system, const Rational &x, int s_min, int s_max);

// Sum of digits[s] q^s over the stored range, without renormalization.
Rational plain_sum(const DigitSequence &seq);

// (1/(q-1)) * sum over s <= s_max + 1 of (x_{s-1} - x_s) q^s.
// Requires |x| < q^s_max and a finite base-q fraction.
Rational renormalized_sum_line(DigitSystem system, const Rational &x, int s_max);

// 1/(1 - q): the renormalized value of sum_{s >= 0} q^s.
Rational geometric_renorm_constant(int q);

// Top-digit redefinition on a nonnegative lattice node. Binary flips the sign
// of the top digit, ternary maps a top digit 2 to -1.
Rational lattice_renormalize_method2(const LatticeSpec &spec, LatticeValue x);

// Telescoped sum restricted to the lattice digits with x_{-n_minus-1} = 0.
Rational lattice_renormalize_method1_binary(const LatticeSpec &spec, LatticeValue x);

// Telescoped lattice sum (1/(q-1)) sum_s (x_{s-1} - x_s) q^s for any base.
Rational lattice_telescoped_sum(const LatticeSpec &spec, LatticeValue x);

// The node whose ternary digits are all 1 together with its telescoped image
// -dx/2, which is not a lattice node.
std::pair<LatticeValue, Rational> ternary_method1_witness(const LatticeSpec &spec);

// Integral of t_ns(s, x) 3^s over s in [s_lo, log3 x], summed exactly over the
// breakpoints s = log3(x / k).
double ternary_integral(double x, double s_lo);

// (1/2) * integral of (t_ns(s-1, x) - t_ns(s, x)) 3^s over [s_lo, s_hi]; valid for
// either sign of x.
double renorm_integral_signed(double x, double s_lo, double s_hi);

// sum_{k=1}^{K} (1/(3k-2) + 1/(3k-1) - 2/(3k)).
double ln3_series_partial(std::int64_t K);

} // namespace qdigits
