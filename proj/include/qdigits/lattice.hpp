#pragma once

#include "qdigits/lattice_spec.hpp"
#include "qdigits/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace qdigits {

// Dense N x N matrix in the coordinate basis, rows ordered by decreasing x.
using OperatorMatrix = Eigen::MatrixXcd;
using complex = std::complex<double>;

// Largest N handled by the dense builders.
inline constexpr std::int64_t dense_limit = 6561;

// Coordinate basis: a lattice plus the window of representatives labelling
// its nodes. Row i carries index window_high - i.
class Basis {
  public:
    explicit Basis(LatticeSpec spec, Representation rep = Representation::nonnegative);

    const LatticeSpec &spec() const noexcept { return spec_; }
    Representation representation() const noexcept { return rep_; }
    std::int64_t size() const noexcept { return spec_.size(); }

    std::int64_t window_low() const noexcept { return spec_.window_low(rep_); }
    std::int64_t window_high() const noexcept { return window_low() + size() - 1; }

    // Integer index K of row i; the coordinate is K dx, or (K + 1/2) dx.
    std::int64_t index_at(std::int64_t row) const noexcept { return window_high() - row; }
    std::int64_t row_of(std::int64_t index) const noexcept { return window_high() - index; }

    // Twice the coordinate in units of dx: 2K, or 2K + 1 on a half-step lattice.
    std::int64_t doubled_units(std::int64_t row) const noexcept;

    Rational coordinate(std::int64_t row) const;

    friend bool operator==(const Basis &, const Basis &) = default;

  private:
    LatticeSpec spec_;
    Representation rep_;
};

// Coordinate values in decreasing order.
std::vector<Rational> coordinate_values(const LatticeSpec &spec, Representation rep = Representation::nonnegative);

// Momentum values J dp (periodic) or (J + 1/2) dp (antiperiodic), decreasing.
std::vector<Rational> momentum_values(const LatticeSpec &spec, Representation rep = Representation::nonnegative);

// Twice the momentum of column c in units of dp, for the given window.
std::int64_t momentum_doubled_units(const LatticeSpec &spec, Representation rep, std::int64_t column);

void require_dense(const LatticeSpec &spec);

// T_A with A = steps * dx: <x'|T_A|x''> = delta(x' + A, x''). On an
// antiperiodic lattice each wrap across the period contributes a factor -1.
OperatorMatrix shift_matrix(const Basis &basis, std::int64_t steps);

// F_{x,p} = e^{2 pi i x p} / sqrt(N); columns follow decreasing momentum.
OperatorMatrix dft_matrix(const Basis &basis, Representation momentum_rep = Representation::nonnegative);

// diag(e^{-2 pi i x B}).
OperatorMatrix momentum_phase_matrix(const Basis &basis, const Rational &B);

// F diag(e^{2 pi i A p}) F^dagger for any rational A. When A is not a multiple
// of dx the result depends on the momentum window.
OperatorMatrix arbitrary_shift(const Basis &basis, const Rational &A,
                               Representation momentum_rep = Representation::nonnegative);

// Projector onto momentum p: entries e^{2 pi i p (x' - x'')} / N.
OperatorMatrix momentum_projector(const Basis &basis, const Rational &p);

// Fourier coefficients c_k = (1/T) sum_t r(t) e^{2 pi i k t / T}, k = 0..T-1, of
// the periodic rectangle r(t) = amplitude for s_node <= t <= f_node.
std::vector<complex> rect_fourier_coefficients(std::int64_t T, std::int64_t s_node, std::int64_t f_node,
                                               complex amplitude);

double max_abs(const OperatorMatrix &m);
double max_abs_difference(const OperatorMatrix &a, const OperatorMatrix &b);

} // namespace qdigits
