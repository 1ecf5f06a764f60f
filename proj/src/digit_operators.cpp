#include "qdigits/digit_operators.hpp"

#include "qdigits/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace qdigits {

namespace {

constexpr complex I{0.0, 1.0};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Coefficient shared by both sides: the expansion of the digit at position
// `index` of a variable whose lattice has `upper` digits above the point.
complex expansion_coefficient(int upper, DigitSystem system, int index, std::int64_t D, int sigma) {
    const int q = system.base;
    const int depth = upper + index + 1;
    const std::int64_t m = q * D + sigma;
    const std::int64_t den = ipow(q, static_cast<unsigned>(depth));
    const double weight = std::pow(static_cast<double>(q), -(upper + index));
    const double sine = sin_pi(m, den);
    if (sine == 0.0) {
        throw DomainError("singular shift term in digit expansion");
    }
    if (!system.symmetric()) {
        // -w / (1 - e^{2 pi i m/den}) with the difference factored.
        return weight * unit_phase(-m, 2 * den) / (2.0 * I * sine);
    }
    const double parity = (q == 3 && mod_pos(D + sigma, 2) == 1) ? -1.0 : 1.0;
    return parity * weight / (2.0 * I * sine);
}

ShiftExpansion build_expansion(const LatticeSpec &spec, DigitSystem system, int upper, int index, ShiftSide side) {
    const int q = system.base;
    ShiftExpansion e;
    e.side = side;
    e.spec = spec;
    e.identity = identity_coefficient(system);
    const std::int64_t count = ipow(q, static_cast<unsigned>(upper + index));
    e.terms.reserve(static_cast<std::size_t>(count * (q - 1)));
    const Rational scale = power(q, -index - 1);
    for (std::int64_t D = 0; D < count; ++D) {
        for (int sigma = 1; sigma < q; ++sigma) {
            e.terms.push_back({scale * Rational(q * D + sigma), expansion_coefficient(upper, system, index, D, sigma)});
        }
    }
    return e;
}

Rational half_units(std::int64_t doubled, const Rational &step) {
    return Rational(BigInt(doubled), BigInt(2)) * step;
}

} // namespace

ShiftExpansion operator+(const ShiftExpansion &a, const ShiftExpansion &b) {
    if (a.side != b.side) {
        throw DomainError("cannot add expansions over different shift families");
    }
    if (a.spec && b.spec && !(*a.spec == *b.spec)) {
        throw DimensionMismatch("cannot add expansions built on different lattices");
    }
    std::map<Rational, complex> merged;
    for (const auto &t : a.terms) {
        merged[t.amount] += t.coefficient;
    }
    for (const auto &t : b.terms) {
        merged[t.amount] += t.coefficient;
    }
    ShiftExpansion out;
    out.side = a.side;
    out.spec = a.spec ? a.spec : b.spec;
    out.identity = a.identity + b.identity;
    for (const auto &[amount, coefficient] : merged) {
        out.terms.push_back({amount, coefficient});
    }
    return out;
}

ShiftExpansion operator*(complex factor, const ShiftExpansion &e) {
    ShiftExpansion out = e;
    out.identity *= factor;
    for (auto &t : out.terms) {
        t.coefficient *= factor;
    }
    return out;
}

Representation default_representation(DigitSystem system) {
    return (system.base == 3 && system.symmetric()) ? Representation::signed_values : Representation::nonnegative;
}

Basis default_basis(const LatticeSpec &spec, DigitSystem system) {
    return Basis(spec, default_representation(system));
}

void require_compatible(const LatticeSpec &spec, DigitSystem system) {
    if (spec.base() != system.base) {
        throw DomainError("lattice base " + std::to_string(spec.base()) + " does not match " + to_string(system));
    }
    const bool binary_symmetric = system.base == 2 && system.symmetric();
    if (binary_symmetric && !(spec.antiperiodic() && spec.half_step())) {
        throw DomainError("binary-symmetric digits need the antiperiodic lattice with half-step offset");
    }
    if (!binary_symmetric && (spec.antiperiodic() || spec.half_step())) {
        throw DomainError(to_string(system) + " digits need a periodic lattice without offset");
    }
}

void require_momentum_index(const LatticeSpec &spec, int r) {
    if (r < -spec.n_plus() || r > spec.n_minus() - 1) {
        throw DomainError("momentum digit index r=" + std::to_string(r) + " outside [" +
                          std::to_string(-spec.n_plus()) + ", " + std::to_string(spec.n_minus() - 1) + "]");
    }
}

void require_coordinate_index(const LatticeSpec &spec, int s) {
    if (s < -spec.n_minus() || s > spec.n_plus() - 1) {
        throw DomainError("coordinate digit index s=" + std::to_string(s) + " outside [" +
                          std::to_string(-spec.n_minus()) + ", " + std::to_string(spec.n_plus() - 1) + "]");
    }
}

complex lattice_momentum_coefficient(int n_plus, DigitSystem system, int r, std::int64_t D, int sigma) {
    return expansion_coefficient(n_plus, system, r, D, sigma);
}

complex identity_coefficient(DigitSystem system) {
    return system.symmetric() ? complex{0.0, 0.0} : complex{(system.base - 1) / 2.0, 0.0};
}

ShiftExpansion momentum_digit_expansion(const LatticeSpec &spec, DigitSystem system, int r) {
    require_compatible(spec, system);
    require_momentum_index(spec, r);
    return build_expansion(spec, system, spec.n_plus(), r, ShiftSide::coordinate_shifts);
}

ShiftExpansion coordinate_digit_expansion(const LatticeSpec &spec, DigitSystem system, int s) {
    require_compatible(spec, system);
    require_coordinate_index(spec, s);
    return build_expansion(spec, system, spec.n_minus(), s, ShiftSide::momentum_shifts);
}

void add_shift(OperatorMatrix &m, const Basis &basis, std::int64_t steps, complex coefficient) {
    const std::int64_t N = basis.size();
    const std::int64_t lo = basis.window_low();
    const bool anti = basis.spec().antiperiodic();
    for (std::int64_t i = 0; i < N; ++i) {
        const std::int64_t target = basis.index_at(i) - steps;
        const std::int64_t wraps = floor_div(target - lo, N);
        const complex c = (anti && (wraps % 2 != 0)) ? -coefficient : coefficient;
        m(i, basis.row_of(target - wraps * N)) += c;
    }
}

OperatorMatrix materialize(const ShiftExpansion &expansion, const Basis &basis, bool spectral_fallback) {
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    OperatorMatrix m = expansion.identity * OperatorMatrix::Identity(N, N);
    if (expansion.side == ShiftSide::momentum_shifts) {
        const Rational dp = basis.spec().dp();
        for (const auto &t : expansion.terms) {
            const Rational steps = t.amount / dp;
            if (denominator_of(steps) == 1) {
                const auto units = numerator_of(steps).convert_to<std::int64_t>();
                for (std::int64_t i = 0; i < N; ++i) {
                    m(i, i) += t.coefficient * unit_phase(-basis.doubled_units(i) * units, 2 * N);
                }
                continue;
            }
            for (std::int64_t i = 0; i < N; ++i) {
                m(i, i) += t.coefficient * unit_phase(-basis.coordinate(i) * t.amount);
            }
        }
        return m;
    }
    const Rational dx = basis.spec().dx();
    for (const auto &t : expansion.terms) {
        const Rational steps = t.amount / dx;
        if (denominator_of(steps) == 1) {
            add_shift(m, basis, numerator_of(steps).convert_to<std::int64_t>(), t.coefficient);
        } else if (spectral_fallback) {
            m += t.coefficient * arbitrary_shift(basis, -t.amount);
        } else {
            throw DomainError("shift " + to_string(t.amount) + " is not a multiple of dx=" + to_string(dx));
        }
    }
    return m;
}

OperatorMatrix momentum_digit_operator(const Basis &basis, DigitSystem system, int r) {
    return materialize(momentum_digit_expansion(basis.spec(), system, r), basis);
}

OperatorMatrix coordinate_digit_operator(const Basis &basis, DigitSystem system, int s) {
    return materialize(coordinate_digit_expansion(basis.spec(), system, s), basis);
}

OperatorMatrix momentum_digit_spectral(const Basis &basis, DigitSystem system, int r) {
    const LatticeSpec &spec = basis.spec();
    require_compatible(spec, system);
    require_momentum_index(spec, r);
    const OperatorMatrix F = dft_matrix(basis);
    Eigen::VectorXcd values(basis.size());
    for (std::int64_t c = 0; c < basis.size(); ++c) {
        const Rational p = half_units(momentum_doubled_units(spec, Representation::nonnegative, c), spec.dp());
        values(c) = to_double(digit(system, r, p));
    }
    return F * values.asDiagonal() * F.adjoint();
}

OperatorMatrix coordinate_digit_diagonal(const Basis &basis, DigitSystem system, int s) {
    require_compatible(basis.spec(), system);
    require_coordinate_index(basis.spec(), s);
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    OperatorMatrix m = OperatorMatrix::Zero(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        m(i, i) = to_double(digit(system, s, basis.coordinate(i)));
    }
    return m;
}

OperatorMatrix coordinate_operator(const Basis &basis) {
    require_dense(basis.spec());
    const std::int64_t N = basis.size();
    OperatorMatrix m = OperatorMatrix::Zero(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        m(i, i) = to_double(basis.coordinate(i));
    }
    return m;
}

OperatorMatrix momentum_operator(const Basis &basis, Representation momentum_rep) {
    const OperatorMatrix F = dft_matrix(basis, momentum_rep);
    const auto momenta = momentum_values(basis.spec(), momentum_rep);
    Eigen::VectorXcd values(basis.size());
    for (std::int64_t c = 0; c < basis.size(); ++c) {
        values(c) = to_double(momenta[static_cast<std::size_t>(c)]);
    }
    return F * values.asDiagonal() * F.adjoint();
}

OperatorMatrix reconstruct_momentum(const Basis &basis, DigitSystem system) {
    const LatticeSpec &spec = basis.spec();
    require_compatible(spec, system);
    require_dense(spec);
    OperatorMatrix total = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
        total += std::pow(static_cast<double>(system.base), r) * momentum_digit_operator(basis, system, r);
    }
    return total;
}

namespace {

template <typename DigitSource>
OperatorMatrix coordinate_sum(const Basis &basis, DigitSystem system, bool renormalized, DigitSource source) {
    const LatticeSpec &spec = basis.spec();
    require_compatible(spec, system);
    require_dense(spec);
    const std::int64_t N = basis.size();
    OperatorMatrix total = OperatorMatrix::Zero(N, N);
    const int top = spec.n_plus() - 1;
    for (int s = -spec.n_minus(); s <= top; ++s) {
        OperatorMatrix digit_op = source(basis, system, s);
        const bool redefine = renormalized && s == top && !(system.base == 3 && system.symmetric());
        if (redefine && system.base == 2) {
            digit_op = -digit_op;
        } else if (redefine) {
            for (std::int64_t i = 0; i < N; ++i) {
                if (std::lround(digit_op(i, i).real()) == 2) {
                    digit_op(i, i) -= 3.0;
                }
            }
        }
        total += std::pow(static_cast<double>(system.base), s) * digit_op;
    }
    return total;
}

} // namespace

OperatorMatrix reconstruct_coordinate(const Basis &basis, DigitSystem system, bool renormalized) {
    return coordinate_sum(basis, system, renormalized, coordinate_digit_operator);
}

OperatorMatrix reconstruct_coordinate_diagonal(const Basis &basis, DigitSystem system, bool renormalized) {
    return coordinate_sum(basis, system, renormalized, coordinate_digit_diagonal);
}

Rational plain_digit_sum_value(DigitSystem system, const LatticeSpec &spec, std::int64_t doubled_units,
                               bool momentum) {
    const std::int64_t N = spec.size();
    const Rational step = momentum ? spec.dp() : spec.dx();
    const std::int64_t K = floor_div(doubled_units, 2);
    if (system.base == 2 && system.symmetric()) {
        return half_units(2 * mod_pos(K, N) + 1 - N, step);
    }
    std::int64_t reduced = mod_pos(K, N);
    if (system.symmetric() && reduced > (N - 1) / 2) {
        reduced -= N;
    }
    return Rational(reduced) * step;
}

ShiftExpansion line_expansion_coefficients(DigitSystem system, int r, std::int64_t D_max) {
    if (D_max < 1) {
        throw DomainError("line expansion needs D_max >= 1");
    }
    const int q = system.base;
    ShiftExpansion e;
    e.side = ShiftSide::coordinate_shifts;
    e.identity = identity_coefficient(system);
    const Rational scale = power(q, -r - 1);
    for (std::int64_t D = -D_max; D <= D_max; ++D) {
        for (int sigma = 1; sigma < q; ++sigma) {
            const double frac = static_cast<double>(D) + static_cast<double>(sigma) / q;
            const double parity = (q == 3 && system.symmetric() && mod_pos(D + sigma, 2) == 1) ? -1.0 : 1.0;
            e.terms.push_back({scale * Rational(q * D + sigma), parity / (2.0 * std::numbers::pi * I * frac)});
        }
    }
    return e;
}

} // namespace qdigits
