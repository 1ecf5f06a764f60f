#include "qdigits/commutators.hpp"

#include "qdigits/errors.hpp"

#include <cmath>
#include <functional>

namespace qdigits {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

struct Hop {
    std::int64_t column;
    double sign;
};

// Column reached from row i by T_{-A}, A = steps * dx, with its wrap sign.
Hop hop(const Basis &basis, std::int64_t row, std::int64_t steps) {
    const std::int64_t N = basis.size();
    const std::int64_t target = basis.index_at(row) - steps;
    const std::int64_t wraps = floor_div(target - basis.window_low(), N);
    const double sign = (basis.spec().antiperiodic() && (wraps % 2 != 0)) ? -1.0 : 1.0;
    return {basis.row_of(target - wraps * N), sign};
}

std::int64_t steps_of(const ShiftTerm &t, const Rational &dx) {
    return numerator_of(t.amount / dx).convert_to<std::int64_t>();
}

// sum over the p_r expansion of c * factor(row, steps, column) * T_{-A}.
void accumulate(OperatorMatrix &out, const Basis &basis, DigitSystem system, int r, double weight,
                const std::function<double(std::int64_t, std::int64_t, std::int64_t)> &factor) {
    const ShiftExpansion e = momentum_digit_expansion(basis.spec(), system, r);
    const Rational dx = basis.spec().dx();
    for (const auto &t : e.terms) {
        const std::int64_t steps = steps_of(t, dx);
        for (std::int64_t i = 0; i < basis.size(); ++i) {
            const Hop h = hop(basis, i, steps);
            const double f = factor(i, steps, h.column);
            if (f != 0.0) {
                out(i, h.column) += weight * h.sign * f * t.coefficient;
            }
        }
    }
}

OperatorMatrix zeros(const Basis &basis) {
    require_dense(basis.spec());
    return OperatorMatrix::Zero(basis.size(), basis.size());
}

} // namespace

OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionMismatch("commutator needs square matrices of equal size, got " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    }
    return a * b - b * a;
}

OperatorMatrix digit_digit_series(const Basis &basis, DigitSystem system, int s, int r) {
    require_coordinate_index(basis.spec(), s);
    OperatorMatrix out = zeros(basis);
    const int j = s + basis.spec().n_minus();
    accumulate(out, basis, system, r, 1.0, [&](std::int64_t i, std::int64_t steps, std::int64_t) {
        const std::int64_t K = basis.index_at(i);
        return lattice_digit(system, j, K) - lattice_digit(system, j, K - steps);
    });
    return out;
}

OperatorMatrix coordinate_digit_series(const Basis &basis, DigitSystem system, int r) {
    OperatorMatrix out = zeros(basis);
    const double dx = to_double(basis.spec().dx());
    accumulate(out, basis, system, r, 1.0, [&](std::int64_t i, std::int64_t, std::int64_t column) {
        return static_cast<double>(basis.index_at(i) - basis.index_at(column)) * dx;
    });
    return out;
}

OperatorMatrix coordinate_digit_line_form(const Basis &basis, DigitSystem system, int r) {
    OperatorMatrix out = zeros(basis);
    const double dx = to_double(basis.spec().dx());
    accumulate(out, basis, system, r, 1.0,
               [&](std::int64_t, std::int64_t steps, std::int64_t) { return static_cast<double>(steps) * dx; });
    return out;
}

OperatorMatrix coordinate_momentum_series(const Basis &basis, DigitSystem system) {
    const LatticeSpec &spec = basis.spec();
    OperatorMatrix out = zeros(basis);
    const double dx = to_double(spec.dx());
    for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
        accumulate(out, basis, system, r, std::pow(static_cast<double>(system.base), r),
                   [&](std::int64_t i, std::int64_t, std::int64_t column) {
                       return static_cast<double>(basis.index_at(i) - basis.index_at(column)) * dx;
                   });
    }
    return out;
}

CommutatorReport digit_digit_report(const Basis &basis, DigitSystem system, int s, int r) {
    CommutatorReport rep{basis.spec(), system, PairKind::digit_digit, s, r, {}, {}, 0.0};
    rep.series = digit_digit_series(basis, system, s, r);
    rep.direct = commutator(coordinate_digit_diagonal(basis, system, s), momentum_digit_spectral(basis, system, r));
    rep.max_abs_difference = max_abs_difference(rep.series, rep.direct);
    return rep;
}

CommutatorReport coordinate_digit_report(const Basis &basis, DigitSystem system, int r) {
    CommutatorReport rep{basis.spec(), system, PairKind::coordinate_digit, 0, r, {}, {}, 0.0};
    rep.series = coordinate_digit_series(basis, system, r);
    rep.direct = commutator(coordinate_operator(basis), momentum_digit_spectral(basis, system, r));
    rep.max_abs_difference = max_abs_difference(rep.series, rep.direct);
    return rep;
}

CommutatorReport coordinate_momentum_report(const Basis &basis, DigitSystem system) {
    CommutatorReport rep{basis.spec(), system, PairKind::coordinate_momentum, 0, 0, {}, {}, 0.0};
    rep.series = coordinate_momentum_series(basis, system);
    OperatorMatrix p = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int r = -basis.spec().n_plus(); r <= basis.spec().n_minus() - 1; ++r) {
        p += std::pow(static_cast<double>(system.base), r) * momentum_digit_spectral(basis, system, r);
    }
    rep.direct = commutator(coordinate_operator(basis), p);
    rep.max_abs_difference = max_abs_difference(rep.series, rep.direct);
    return rep;
}

std::map<std::pair<int, int>, bool> commutation_support_table(const Basis &basis, DigitSystem system) {
    const LatticeSpec &spec = basis.spec();
    std::map<std::pair<int, int>, bool> table;
    for (int s = -spec.n_minus(); s <= spec.n_plus() - 1; ++s) {
        const OperatorMatrix xs = coordinate_digit_diagonal(basis, system, s);
        for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
            const OperatorMatrix c = commutator(xs, momentum_digit_spectral(basis, system, r));
            table[{s, r}] = max_abs(c) > 1e-10;
        }
    }
    return table;
}

ShiftSumResult shift_sum_identity(const LatticeSpec &spec) {
    if (spec.antiperiodic()) {
        throw DomainError("the shift sum identity needs a periodic lattice (p = 0 is not a momentum otherwise)");
    }
    const Basis basis(spec);
    OperatorMatrix sum = zeros(basis);
    for (std::int64_t m = 0; m < spec.size(); ++m) {
        add_shift(sum, basis, -m, 1.0);
    }
    ShiftSumResult result;
    result.matrix = sum - static_cast<double>(spec.size()) * momentum_projector(basis, Rational(0));
    result.deviation = max_abs(result.matrix);
    return result;
}

OperatorMatrix symmetric_shift_sum_partial(const LatticeSpec &spec, std::int64_t cutoff) {
    const Basis basis(spec, Representation::signed_values);
    OperatorMatrix sum = zeros(basis);
    for (std::int64_t m = 1; m <= cutoff; ++m) {
        std::int64_t a = m;
        while (a % 3 == 0) {
            a /= 3;
        }
        const double parity = (a % 2 == 0) ? 1.0 : -1.0;
        add_shift(sum, basis, -m, parity);
        add_shift(sum, basis, m, parity);
    }
    return sum;
}

std::string to_string(PairKind kind) {
    switch (kind) {
    case PairKind::digit_digit:
        return "digit-digit";
    case PairKind::coordinate_digit:
        return "coordinate-digit";
    case PairKind::coordinate_momentum:
        return "coordinate-momentum";
    }
    return "unknown";
}

} // namespace qdigits
