#include "qdigits/commutators.hpp"
#include "qdigits/errors.hpp"

#include <gtest/gtest.h>

using namespace qdigits;

namespace {

constexpr double tol = 1e-10;

std::vector<LatticeSpec> specs_for(DigitSystem system, int max_n) {
    std::vector<LatticeSpec> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int nm = 0; nm <= n; ++nm) {
            out.push_back(system.base == 2 && system.symmetric() ? LatticeSpec::binary_symmetric(n, nm)
                                                                 : LatticeSpec(system.base, n, nm));
        }
    }
    return out;
}

OperatorMatrix direct_digit_digit(const Basis &basis, DigitSystem system, int s, int r) {
    const OperatorMatrix a = coordinate_digit_diagonal(basis, system, s);
    const OperatorMatrix b = momentum_digit_spectral(basis, system, r);
    return a * b - b * a;
}

} // namespace

TEST(Commutator, Basics) {
    const OperatorMatrix a = OperatorMatrix::Random(4, 4);
    EXPECT_LT(max_abs(commutator(a, a)), 1e-15);
    EXPECT_THROW(commutator(a, OperatorMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST(DigitDigit, SeriesMatchesDirect) {
    for (const auto system : all_digit_systems()) {
        for (const auto &spec : specs_for(system, 3)) {
            const Basis basis = default_basis(spec, system);
            for (int s = -spec.n_minus(); s < spec.n_plus(); ++s) {
                for (int r = -spec.n_plus(); r < spec.n_minus(); ++r) {
                    EXPECT_LT(max_abs_difference(digit_digit_series(basis, system, s, r),
                                                 direct_digit_digit(basis, system, s, r)),
                              tol)
                        << to_string(system) << " " << spec.describe() << " s=" << s << " r=" << r;
                }
            }
        }
    }
}

TEST(DigitDigit, WorkedPairs) {
    const LatticeSpec spec(3, 2, 1);
    const Basis basis(spec, Representation::nonnegative);
    const auto sys = DigitSystem::ternary_nonsymmetric();
    const auto report = digit_digit_report(basis, sys, 0, 0);
    EXPECT_GT(max_abs(report.series), 1e-3);
    EXPECT_LT(report.max_abs_difference, tol);
    EXPECT_LT(max_abs(digit_digit_series(basis, sys, -1, -1)), tol);
}

TEST(DigitDigit, LowestMomentumDigitMeetsOnlyTopCoordinateDigit) {
    for (const auto system : all_digit_systems()) {
        for (const auto &spec : specs_for(system, 4)) {
            const Basis basis = default_basis(spec, system);
            const int r = -spec.n_plus();
            for (int s = -spec.n_minus(); s < spec.n_plus() - 1; ++s) {
                EXPECT_LT(max_abs(direct_digit_digit(basis, system, s, r)), tol);
            }
        }
    }
}

TEST(SupportTable, VanishesExactlyBelowTheDiagonal) {
    for (const auto system : all_digit_systems()) {
        for (const auto &spec : specs_for(system, 4)) {
            for (const auto &[key, nonzero] : commutation_support_table(default_basis(spec, system), system)) {
                EXPECT_EQ(nonzero, key.first + key.second >= -1)
                    << to_string(system) << " " << spec.describe() << " s=" << key.first << " r=" << key.second;
            }
        }
    }
}

TEST(CoordinateDigit, SeriesMatchesDirect) {
    for (const auto system : all_digit_systems()) {
        for (const auto &spec : specs_for(system, 3)) {
            const Basis basis = default_basis(spec, system);
            const OperatorMatrix x = coordinate_operator(basis);
            for (int r = -spec.n_plus(); r < spec.n_minus(); ++r) {
                const OperatorMatrix p = momentum_digit_spectral(basis, system, r);
                EXPECT_LT(max_abs_difference(coordinate_digit_series(basis, system, r), x * p - p * x), 1e-9);
            }
        }
    }
}

TEST(CoordinateMomentum, SeriesMatchesDirect) {
    for (const auto system : all_digit_systems()) {
        for (const auto &spec : specs_for(system, 3)) {
            const Basis basis = default_basis(spec, system);
            const auto report = coordinate_momentum_report(basis, system);
            EXPECT_LT(report.max_abs_difference, 1e-9);
        }
    }
}

TEST(ShiftSum, EqualsScaledZeroProjector) {
    for (const int q : {2, 3}) {
        for (int n = 0; n <= 5; ++n) {
            const auto result = shift_sum_identity(LatticeSpec(q, n, n / 2));
            EXPECT_LT(result.deviation, tol);
        }
    }
    const auto trivial = shift_sum_identity(LatticeSpec(3, 0, 0));
    EXPECT_EQ(trivial.deviation, 0.0);
}

TEST(ShiftSum, AnnihilatesNonzeroMomenta) {
    const LatticeSpec spec(3, 2, 1);
    const Basis basis(spec, Representation::nonnegative);
    OperatorMatrix sum = OperatorMatrix::Zero(9, 9);
    for (std::int64_t m = 0; m < 9; ++m) {
        sum += shift_matrix(basis, m);
    }
    const OperatorMatrix F = dft_matrix(basis);
    const auto momenta = momentum_values(spec);
    for (std::int64_t c = 0; c < 9; ++c) {
        const double norm = (sum * F.col(c)).norm();
        if (momenta[static_cast<std::size_t>(c)] == 0) {
            EXPECT_NEAR(norm, 9.0, tol);
        } else {
            EXPECT_LT(norm, tol);
        }
    }
}
