#include "qdigits/lattice.hpp"

#include "qdigits/errors.hpp"

#include <cmath>

namespace qdigits {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

Basis::Basis(LatticeSpec spec, Representation rep) : spec_(spec), rep_(rep) {}

std::int64_t Basis::doubled_units(std::int64_t row) const noexcept {
    return 2 * index_at(row) + (spec_.half_step() ? 1 : 0);
}

Rational Basis::coordinate(std::int64_t row) const {
    return Rational(BigInt(doubled_units(row)), BigInt(2)) * spec_.dx();
}

std::vector<Rational> coordinate_values(const LatticeSpec &spec, Representation rep) {
    const Basis basis(spec, rep);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(spec.size()));
    for (std::int64_t i = 0; i < spec.size(); ++i) {
        out.push_back(basis.coordinate(i));
    }
    return out;
}

std::int64_t momentum_doubled_units(const LatticeSpec &spec, Representation rep, std::int64_t column) {
    const std::int64_t J = spec.window_low(rep) + spec.size() - 1 - column;
    return 2 * J + (spec.antiperiodic() ? 1 : 0);
}

std::vector<Rational> momentum_values(const LatticeSpec &spec, Representation rep) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(spec.size()));
    for (std::int64_t c = 0; c < spec.size(); ++c) {
        out.push_back(Rational(BigInt(momentum_doubled_units(spec, rep, c)), BigInt(2)) * spec.dp());
    }
    return out;
}

void require_dense(const LatticeSpec &spec) {
    if (spec.size() > dense_limit) {
        throw DomainError("N=" + std::to_string(spec.size()) + " exceeds the dense matrix limit " +
                          std::to_string(dense_limit));
    }
}

OperatorMatrix shift_matrix(const Basis &basis, std::int64_t steps) {
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    const std::int64_t lo = basis.window_low();
    OperatorMatrix T = OperatorMatrix::Zero(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        const std::int64_t target = basis.index_at(i) + steps;
        const std::int64_t wraps = floor_div(target - lo, N);
        const double sign = (basis.spec().antiperiodic() && (wraps % 2 != 0)) ? -1.0 : 1.0;
        T(i, basis.row_of(target - wraps * N)) = sign;
    }
    return T;
}

OperatorMatrix dft_matrix(const Basis &basis, Representation momentum_rep) {
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(N));
    OperatorMatrix F(N, N);
    for (std::int64_t c = 0; c < N; ++c) {
        const std::int64_t p2 = momentum_doubled_units(basis.spec(), momentum_rep, c);
        for (std::int64_t i = 0; i < N; ++i) {
            F(i, c) = norm * unit_phase(basis.doubled_units(i) * p2, 4 * N);
        }
    }
    return F;
}

OperatorMatrix momentum_phase_matrix(const Basis &basis, const Rational &B) {
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    OperatorMatrix S = OperatorMatrix::Zero(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        S(i, i) = unit_phase(-basis.coordinate(i) * B);
    }
    return S;
}

OperatorMatrix arbitrary_shift(const Basis &basis, const Rational &A, Representation momentum_rep) {
    const OperatorMatrix F = dft_matrix(basis, momentum_rep);
    const auto momenta = momentum_values(basis.spec(), momentum_rep);
    Eigen::VectorXcd phases(basis.size());
    for (std::int64_t c = 0; c < basis.size(); ++c) {
        phases(c) = unit_phase(A * momenta[static_cast<std::size_t>(c)]);
    }
    return F * phases.asDiagonal() * F.adjoint();
}

OperatorMatrix momentum_projector(const Basis &basis, const Rational &p) {
    require_dense(basis.spec());
    const LatticeSpec &spec = basis.spec();
    Rational units = p / spec.dp();
    if (spec.antiperiodic()) {
        units -= Rational(BigInt(1), BigInt(2));
    }
    if (denominator_of(units) != 1) {
        throw DomainError(to_string(p) + " is not on the momentum lattice of " + spec.describe());
    }
    const std::int64_t N = basis.size();
    const auto p2 = (2 * numerator_of(units) + (spec.antiperiodic() ? 1 : 0)).convert_to<std::int64_t>();
    const double inv = 1.0 / static_cast<double>(N);
    OperatorMatrix P(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        for (std::int64_t j = 0; j < N; ++j) {
            P(i, j) = inv * unit_phase(p2 * (basis.doubled_units(i) - basis.doubled_units(j)), 4 * N);
        }
    }
    return P;
}

std::vector<complex> rect_fourier_coefficients(std::int64_t T, std::int64_t s_node, std::int64_t f_node,
                                               complex amplitude) {
    if (T < 1 || s_node < 0 || f_node < s_node || f_node >= T) {
        throw DomainError("rectangle needs 0 <= s <= f < T");
    }
    std::vector<complex> c(static_cast<std::size_t>(T));
    const double inv = 1.0 / static_cast<double>(T);
    c[0] = amplitude * inv * static_cast<double>(f_node - s_node + 1);
    for (std::int64_t k = 1; k < T; ++k) {
        const complex num = 1.0 - unit_phase(k * (f_node - s_node + 1), T);
        const complex den = 1.0 - unit_phase(k, T);
        c[static_cast<std::size_t>(k)] = amplitude * inv * unit_phase(k * s_node, T) * num / den;
    }
    return c;
}

double max_abs(const OperatorMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_difference(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrices differ in shape");
    }
    return max_abs(a - b);
}

} // namespace qdigits
