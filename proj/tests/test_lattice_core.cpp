#include "qdigits/errors.hpp"
#include "qdigits/lattice.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace qdigits;

namespace {

constexpr double tol = 1e-12;

std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
    std::vector<Rational> out;
    for (const auto v : values) {
        out.emplace_back(v);
    }
    return out;
}

OperatorMatrix identity(std::int64_t n) { return OperatorMatrix::Identity(n, n); }

// Naive sum over the rectangle's support.
complex direct_rect_coefficient(std::int64_t T, std::int64_t s, std::int64_t f, complex a, std::int64_t k) {
    complex total = 0.0;
    for (std::int64_t t = s; t <= f; ++t) {
        total += a * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(T));
    }
    return total / static_cast<double>(T);
}

} // namespace

TEST(LatticeSpec, Validation) {
    EXPECT_THROW(LatticeSpec(4, 1, 0), DomainError);
    EXPECT_THROW(LatticeSpec(3, 2, 3), DomainError);
    EXPECT_THROW(LatticeSpec(3, 20, 0), DomainError);
    EXPECT_THROW(LatticeSpec(3, 2, 0, Boundary::antiperiodic), DomainError);
    const LatticeSpec spec(3, 3, 1);
    EXPECT_EQ(spec.size(), 27);
    EXPECT_EQ(spec.dx(), make_rational(1, 3));
    EXPECT_EQ(spec.dp(), make_rational(1, 9));
    EXPECT_EQ(spec.period(), Rational(9));
    EXPECT_EQ(lattice_value_of(spec, make_rational(5, 3)).k, 5);
    EXPECT_THROW(lattice_value_of(spec, make_rational(1, 2)), DomainError);
}

TEST(Values, Coordinates) {
    EXPECT_EQ(coordinate_values(LatticeSpec(3, 1, 0), Representation::signed_values), ints({1, 0, -1}));
    EXPECT_EQ(coordinate_values(LatticeSpec(3, 2, 0), Representation::signed_values),
              ints({4, 3, 2, 1, 0, -1, -2, -3, -4}));
    EXPECT_EQ(coordinate_values(LatticeSpec(3, 2, 0)), ints({8, 7, 6, 5, 4, 3, 2, 1, 0}));
    const auto half = coordinate_values(LatticeSpec::binary_symmetric(2, 0));
    EXPECT_EQ(half.front(), make_rational(7, 2));
    EXPECT_EQ(half.back(), make_rational(1, 2));
}

TEST(Values, Momenta) {
    const auto p3 = momentum_values(LatticeSpec(3, 1, 0));
    std::vector<Rational> sorted(p3.rbegin(), p3.rend());
    EXPECT_EQ(sorted, (std::vector<Rational>{Rational(0), make_rational(1, 3), make_rational(2, 3)}));
    const auto anti = momentum_values(LatticeSpec::binary_symmetric(2, 0));
    std::vector<Rational> anti_sorted(anti.rbegin(), anti.rend());
    EXPECT_EQ(anti_sorted, (std::vector<Rational>{make_rational(1, 8), make_rational(3, 8), make_rational(5, 8),
                                                  make_rational(7, 8)}));
    EXPECT_EQ(momentum_values(LatticeSpec(3, 1, 0), Representation::signed_values),
              (std::vector<Rational>{make_rational(1, 3), Rational(0), make_rational(-1, 3)}));
}

TEST(Shift, IdentityAndPeriod) {
    const Basis periodic(LatticeSpec(3, 2, 1), Representation::nonnegative);
    EXPECT_EQ(max_abs_difference(shift_matrix(periodic, 0), identity(9)), 0.0);
    EXPECT_EQ(max_abs_difference(shift_matrix(periodic, 9), identity(9)), 0.0);
    const Basis anti(LatticeSpec::binary_symmetric(3, 1), Representation::nonnegative);
    EXPECT_EQ(max_abs_difference(shift_matrix(anti, 8), -identity(8)), 0.0);
    EXPECT_EQ(max_abs_difference(shift_matrix(anti, 16), identity(8)), 0.0);
}

TEST(Shift, ColumnPicture) {
    const Basis basis(LatticeSpec(3, 1, 0), Representation::nonnegative);
    OperatorMatrix expected = OperatorMatrix::Zero(3, 3);
    expected(0, 2) = 1.0;
    expected(1, 0) = 1.0;
    expected(2, 1) = 1.0;
    EXPECT_EQ(max_abs_difference(shift_matrix(basis, 1), expected), 0.0);
}

TEST(Shift, GroupLawAndUnitarity) {
    for (const auto &spec : {LatticeSpec(3, 2, 0), LatticeSpec::binary_symmetric(3, 1)}) {
        const Basis basis(spec, Representation::nonnegative);
        for (std::int64_t a = -5; a <= 5; ++a) {
            const OperatorMatrix Ta = shift_matrix(basis, a);
            EXPECT_LT(max_abs_difference(Ta * Ta.adjoint(), identity(spec.size())), tol);
            for (std::int64_t b = -5; b <= 5; ++b) {
                EXPECT_EQ(max_abs_difference(Ta * shift_matrix(basis, b), shift_matrix(basis, a + b)), 0.0);
            }
        }
    }
}

TEST(Dft, UnitaryAndDiagonalizesShift) {
    EXPECT_LT(std::abs(dft_matrix(Basis(LatticeSpec(3, 0, 0), Representation::nonnegative))(0, 0) - 1.0), tol);
    for (const auto &spec : {LatticeSpec(3, 2, 1), LatticeSpec(2, 3, 2), LatticeSpec::binary_symmetric(3, 1)}) {
        for (const auto rep : {Representation::nonnegative, Representation::signed_values}) {
            const Basis basis(spec, rep);
            const OperatorMatrix F = dft_matrix(basis);
            EXPECT_LT(max_abs_difference(F.adjoint() * F, identity(spec.size())), tol);
            const OperatorMatrix D = F.adjoint() * shift_matrix(basis, 1) * F;
            const auto p = momentum_values(spec);
            for (std::int64_t c = 0; c < spec.size(); ++c) {
                const complex expected = unit_phase(spec.dx() * p[static_cast<std::size_t>(c)]);
                EXPECT_LT(std::abs(D(c, c) - expected), tol);
            }
            EXPECT_LT(max_abs(D - OperatorMatrix(D.diagonal().asDiagonal())), tol);
        }
    }
}

TEST(Phase, Values) {
    const Basis basis(LatticeSpec(3, 1, 0), Representation::nonnegative);
    EXPECT_LT(max_abs_difference(momentum_phase_matrix(basis, Rational(0)), identity(3)), tol);
    const LatticeSpec fine(3, 2, 1);
    EXPECT_LT(max_abs_difference(momentum_phase_matrix(Basis(fine, Representation::signed_values), fine.momentum_period()),
                                 identity(9)),
              tol);
    const OperatorMatrix S = momentum_phase_matrix(basis, make_rational(1, 3));
    EXPECT_LT(std::abs(S(0, 0) - std::polar(1.0, -4.0 * std::numbers::pi / 3.0)), tol);
    EXPECT_LT(std::abs(S(1, 1) - std::polar(1.0, -2.0 * std::numbers::pi / 3.0)), tol);
    EXPECT_LT(std::abs(S(2, 2) - 1.0), tol);
}

TEST(ArbitraryShift, AgreesWithPermutations) {
    const LatticeSpec spec(3, 2, 1);
    const Basis basis(spec, Representation::nonnegative);
    EXPECT_LT(max_abs_difference(arbitrary_shift(basis, spec.dx()), shift_matrix(basis, 1)), tol);
    EXPECT_LT(max_abs_difference(arbitrary_shift(basis, spec.period()), identity(9)), tol);
    const OperatorMatrix half = arbitrary_shift(basis, spec.dx() / 2);
    int nonzero = 0;
    for (std::int64_t i = 0; i < 9; ++i) {
        nonzero += std::abs(half(i, 8)) > 1e-6 ? 1 : 0;
    }
    EXPECT_GT(nonzero, 1);
}

TEST(Projector, Values) {
    const Basis basis(LatticeSpec(3, 1, 0), Representation::nonnegative);
    EXPECT_LT(max_abs_difference(momentum_projector(basis, Rational(0)), OperatorMatrix::Constant(3, 3, 1.0 / 3.0)), tol);
    const OperatorMatrix P = momentum_projector(basis, make_rational(1, 3));
    for (std::int64_t i = 0; i < 3; ++i) {
        for (std::int64_t j = 0; j < 3; ++j) {
            const double d = to_double(basis.coordinate(i) - basis.coordinate(j));
            EXPECT_LT(std::abs(P(i, j) - std::polar(1.0, 2.0 * std::numbers::pi * d / 3.0) / 3.0), tol);
        }
    }
    EXPECT_LT(max_abs_difference(P * P, P), tol);
    EXPECT_THROW(momentum_projector(basis, make_rational(1, 6)), DomainError);
}

TEST(Projector, CompletenessOnAntiperiodicLattice) {
    const LatticeSpec spec = LatticeSpec::binary_symmetric(3, 1);
    const Basis basis(spec, Representation::nonnegative);
    OperatorMatrix total = OperatorMatrix::Zero(8, 8);
    for (const auto &p : momentum_values(spec)) {
        total += momentum_projector(basis, p);
    }
    EXPECT_LT(max_abs_difference(total, identity(8)), tol);
}

TEST(RectFourier, MatchesDirectSum) {
    for (const std::int64_t T : {1, 3, 8, 9}) {
        for (std::int64_t s = 0; s < T; ++s) {
            for (std::int64_t f = s; f < T; ++f) {
                const complex a(0.5, -1.25);
                const auto c = rect_fourier_coefficients(T, s, f, a);
                for (std::int64_t k = 0; k < T; ++k) {
                    EXPECT_LT(std::abs(c[static_cast<std::size_t>(k)] - direct_rect_coefficient(T, s, f, a, k)), tol);
                }
            }
        }
    }
}

TEST(RectFourier, WorkedValues) {
    const auto full = rect_fourier_coefficients(5, 0, 4, 2.0);
    EXPECT_LT(std::abs(full[0] - 2.0), tol);
    for (std::size_t k = 1; k < full.size(); ++k) {
        EXPECT_LT(std::abs(full[k]), tol);
    }
    for (const auto &ck : rect_fourier_coefficients(3, 0, 0, 1.0)) {
        EXPECT_LT(std::abs(ck - 1.0 / 3.0), tol);
    }
    EXPECT_THROW(rect_fourier_coefficients(3, 2, 1, 1.0), DomainError);
}

TEST(Dense, LimitEnforced) {
    EXPECT_THROW(shift_matrix(Basis(LatticeSpec(3, 9, 0), Representation::nonnegative), 1), DomainError);
    EXPECT_THROW(max_abs_difference(identity(2), identity(3)), DimensionMismatch);
}
