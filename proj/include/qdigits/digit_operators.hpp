#pragma once

#include "qdigits/lattice.hpp"
#include "qdigits/number_systems.hpp"

#include <optional>
#include <vector>

namespace qdigits {

// T: coordinate shifts T_{-A} = e^{-2 pi i A p}. S: momentum shifts S_B = e^{-2 pi i x B}.
enum class ShiftSide { coordinate_shifts, momentum_shifts };

struct ShiftTerm {
    Rational amount;
    complex coefficient;
};

// identity * 1 + sum_k coefficient_k * (T_{-A_k} or S_{B_k}).
struct ShiftExpansion {
    ShiftSide side = ShiftSide::coordinate_shifts;
    std::optional<LatticeSpec> spec;
    complex identity{0.0, 0.0};
    std::vector<ShiftTerm> terms;
};

ShiftExpansion operator+(const ShiftExpansion &a, const ShiftExpansion &b);
ShiftExpansion operator*(complex factor, const ShiftExpansion &e);

// Ternary symmetric digits are labelled in the balanced window, the rest in the
// nonnegative one.
Representation default_representation(DigitSystem system);
Basis default_basis(const LatticeSpec &spec, DigitSystem system);

// Throws DomainError unless the lattice suits the system: binary symmetric
// needs the antiperiodic half-step lattice, the others the plain periodic one.
void require_compatible(const LatticeSpec &spec, DigitSystem system);

void require_momentum_index(const LatticeSpec &spec, int r);
void require_coordinate_index(const LatticeSpec &spec, int s);

// Coefficient of T_{-A}, A = q^{-r-1}(qD + sigma), in the lattice expansion of
// the r-th momentum digit, for any integer D.
complex lattice_momentum_coefficient(int n_plus, DigitSystem system, int r, std::int64_t D, int sigma);

// Identity coefficient of a digit expansion: (q-1)/2 for nonsymmetric systems.
complex identity_coefficient(DigitSystem system);

// r-th momentum digit as a sum of coordinate shifts, D in {0..q^{n_plus+r}-1}.
ShiftExpansion momentum_digit_expansion(const LatticeSpec &spec, DigitSystem system, int r);

// s-th coordinate digit as a sum of momentum shifts, D in {0..q^{n_minus+s}-1}.
ShiftExpansion coordinate_digit_expansion(const LatticeSpec &spec, DigitSystem system, int s);

// identity * 1 + sum coefficient * shift in the given basis. Coordinate shifts
// off the lattice fall back to the spectral construction only when allowed.
OperatorMatrix materialize(const ShiftExpansion &expansion, const Basis &basis, bool spectral_fallback = false);

// Adds coefficient * T_{-A} with A = steps * dx to m in O(N).
void add_shift(OperatorMatrix &m, const Basis &basis, std::int64_t steps, complex coefficient);

OperatorMatrix momentum_digit_operator(const Basis &basis, DigitSystem system, int r);
OperatorMatrix coordinate_digit_operator(const Basis &basis, DigitSystem system, int s);

// F diag(digit(system, r, p)) F^dagger.
OperatorMatrix momentum_digit_spectral(const Basis &basis, DigitSystem system, int r);

// diag(digit(system, s, x)) over the basis labels.
OperatorMatrix coordinate_digit_diagonal(const Basis &basis, DigitSystem system, int s);

// diag(x) over the basis labels.
OperatorMatrix coordinate_operator(const Basis &basis);

// F diag(p) F^dagger with p taken from the given momentum window.
OperatorMatrix momentum_operator(const Basis &basis, Representation momentum_rep);

// sum_r q^r p_r.
OperatorMatrix reconstruct_momentum(const Basis &basis, DigitSystem system);

// sum_s q^s x_s, or with the top digit redefined (2 -> -1 for ternary, sign
// flip for binary) when renormalized. Ternary symmetric needs no redefinition.
OperatorMatrix reconstruct_coordinate(const Basis &basis, DigitSystem system, bool renormalized);
// Same sum over the digit tables instead of the shift expansions; exact.
OperatorMatrix reconstruct_coordinate_diagonal(const Basis &basis, DigitSystem system, bool renormalized);

// Value a plain digit sum assigns to the lattice label with the given doubled
// units of the step (coordinate: units of dx, momentum: units of dp). Binary
// symmetric sums land half a period below the label.
Rational plain_digit_sum_value(DigitSystem system, const LatticeSpec &spec, std::int64_t doubled_units,
                               bool momentum);

// Line (n -> infinity) coefficients of the r-th momentum digit over the
// symmetric window D in [-D_max, D_max].
ShiftExpansion line_expansion_coefficients(DigitSystem system, int r, std::int64_t D_max);

} // namespace qdigits
