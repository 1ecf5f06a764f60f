#pragma once

#include "qdigits/digit_operators.hpp"

#include <map>
#include <string>
#include <utility>

namespace qdigits {

// Planck constant h = 1.
inline constexpr double hbar = 0.15915494309189533576888376337251436;

// ab - ba.
OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b);

// [x_s, p_r] = sum c (t(s, x) - t(s, x - A)) T_{-A} over the momentum digit expansion.
OperatorMatrix digit_digit_series(const Basis &basis, DigitSystem system, int s, int r);

// [x, p_r] = sum c (x' - x'') T_{-A}, with x'' the label the shift reaches in
// the basis window.
OperatorMatrix coordinate_digit_series(const Basis &basis, DigitSystem system, int r);

// sum c A T_{-A}: the same series with the factor taken off the lattice. Agrees
// with the commutator only on rows the shift does not wrap.
OperatorMatrix coordinate_digit_line_form(const Basis &basis, DigitSystem system, int r);

// [x, p] = sum_r q^r [x, p_r] evaluated as one double sum.
OperatorMatrix coordinate_momentum_series(const Basis &basis, DigitSystem system);

enum class PairKind { digit_digit, coordinate_digit, coordinate_momentum };

struct CommutatorReport {
    LatticeSpec spec;
    DigitSystem system;
    PairKind kind;
    int s = 0;
    int r = 0;
    OperatorMatrix series;
    OperatorMatrix direct;
    double max_abs_difference = 0.0;
};

// Series against the commutator of the independent diagonal and DFT operators.
CommutatorReport digit_digit_report(const Basis &basis, DigitSystem system, int s, int r);
CommutatorReport coordinate_digit_report(const Basis &basis, DigitSystem system, int r);
CommutatorReport coordinate_momentum_report(const Basis &basis, DigitSystem system);

// (s, r) -> whether [x_s, p_r] has an entry above 1e-10.
std::map<std::pair<int, int>, bool> commutation_support_table(const Basis &basis, DigitSystem system);

struct ShiftSumResult {
    OperatorMatrix matrix;
    double deviation = 0.0;
};

// sum over all lattice shifts T_A minus N P_0; periodic lattices only.
ShiftSumResult shift_sum_identity(const LatticeSpec &spec);

// sum over 0 < |m| <= cutoff of (-1)^a T_{m dx}, with a the shift scaled so its
// lowest nonzero ternary digit sits at position 0. Reported, never asserted.
OperatorMatrix symmetric_shift_sum_partial(const LatticeSpec &spec, std::int64_t cutoff);

std::string to_string(PairKind kind);

} // namespace qdigits
