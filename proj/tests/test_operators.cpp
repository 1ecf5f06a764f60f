#include "qdigits/errors.hpp"
#include "qdigits/operators.hpp"
#include "qdigits/sweeps.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qdigits;

namespace {

OperatorRequest request(OperatorKind kind, Flavor flavor, int index = 0) {
    OperatorRequest r;
    r.kind = kind;
    r.flavor = flavor;
    r.index = index;
    return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cell_in(line);
        std::string cell;
        while (std::getline(cell_in, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST(BuildOperator, Identity) {
    const auto m = build_operator(LatticeSpec(3, 1, 0), request(OperatorKind::identity, Flavor::symmetric));
    EXPECT_EQ(max_abs_difference(m, OperatorMatrix::Identity(3, 3)), 0.0);
}

TEST(BuildOperator, ExactCoordinate) {
    const auto m = build_operator(LatticeSpec(3, 2, 0), request(OperatorKind::x, Flavor::nonsymmetric));
    for (int i = 0; i < 9; ++i) {
        EXPECT_EQ(m(i, i), complex(8 - i, 0.0));
    }
}

TEST(BuildOperator, ShiftKinds) {
    const LatticeSpec spec(3, 2, 0);
    auto r = request(OperatorKind::shift, Flavor::nonsymmetric);
    r.amount = Rational(2);
    EXPECT_EQ(max_abs_difference(build_operator(spec, r), shift_matrix(Basis(spec, Representation::nonnegative), 2)), 0.0);
    r.amount = make_rational(1, 2);
    EXPECT_LT(max_abs_difference(build_operator(spec, r), arbitrary_shift(Basis(spec, Representation::nonnegative),
                                                                         make_rational(1, 2))),
              1e-12);
    r.kind = OperatorKind::projector;
    r.amount = make_rational(1, 9);
    EXPECT_NO_THROW(build_operator(spec, r));
    r.amount = make_rational(1, 2);
    EXPECT_THROW(build_operator(spec, r), DomainError);
}

TEST(BuildOperator, InvalidIndex) {
    EXPECT_THROW(build_operator(LatticeSpec(3, 1, 0), request(OperatorKind::p_digit, Flavor::symmetric, 0)), DomainError);
    EXPECT_THROW(parse_operator_kind("spin"), std::invalid_argument);
}

TEST(MatrixDocument, MetadataAndRoundTrip) {
    const LatticeSpec spec(3, 1, 0);
    const auto req = request(OperatorKind::p_digit, Flavor::symmetric, -1);
    const auto m = build_operator(spec, req);
    const std::string text = matrix_document(spec, req, m);
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc["meta"]["q"], 3);
    EXPECT_EQ(doc["meta"]["n"], 1);
    EXPECT_EQ(doc["meta"]["n_minus"], 0);
    EXPECT_EQ(doc["meta"]["system"], "ternary-symmetric");
    EXPECT_EQ(doc["meta"]["op"], "p-digit");
    EXPECT_EQ(doc["meta"]["index"], -1);
    EXPECT_EQ(doc["meta"]["basis_order"], "rows ordered by decreasing x");
    EXPECT_EQ(doc["meta"]["representation"], "signed");
    EXPECT_EQ(doc["rows"], 3);
    EXPECT_EQ(doc["entries"].size(), 9u);
    EXPECT_TRUE(doc["entries"][1].is_array());
    EXPECT_EQ(max_abs_difference(parse_matrix_document(text), m), 0.0);
}

TEST(MatrixDocument, RoundTripIsBitExactForAwkwardValues) {
    const LatticeSpec spec(3, 3, 1);
    const auto req = request(OperatorKind::p, Flavor::nonsymmetric);
    const auto m = build_operator(spec, req);
    const auto back = parse_matrix_document(matrix_document(spec, req, m));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            EXPECT_EQ(back(i, j), m(i, j));
        }
    }
}

TEST(MatrixDocument, RejectsShortEntries) {
    EXPECT_THROW(parse_matrix_document(R"({"rows":2,"cols":2,"entries":[[1,0]]})"), DimensionMismatch);
}

TEST(Sweeps, Ln3ErrorDecreases) {
    const auto rows = csv_rows(run_sweep(SweepKind::ln3_series, {}));
    ASSERT_GT(rows.size(), 3u);
    EXPECT_EQ(rows[0][0], "K");
    for (std::size_t i = 2; i < rows.size(); ++i) {
        EXPECT_LT(std::stod(rows[i][2]), std::stod(rows[i - 1][2]));
    }
}

TEST(Sweeps, IntegralErrorScalesWithLowerLimit) {
    const auto rows = csv_rows(run_sweep(SweepKind::integral_convergence, {}));
    EXPECT_EQ(rows[0][0], "s_lo");
    std::vector<double> scaled;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const int s_lo = std::stoi(rows[i][0]);
        if (s_lo == -10 || s_lo == -20) {
            scaled.push_back(std::stod(rows[i][3]));
        }
    }
    ASSERT_EQ(scaled.size(), 2u);
    EXPECT_NEAR(scaled[0] / scaled[1], 1.0, 1e-3);
}

TEST(Sweeps, LineDeviationDecreases) {
    for (const auto system : all_digit_systems()) {
        SweepOptions options;
        options.system = system;
        const auto rows = csv_rows(run_sweep(SweepKind::line_convergence, options));
        EXPECT_EQ(rows[0][0], "n_plus");
        for (std::size_t i = 2; i < rows.size(); ++i) {
            EXPECT_LT(std::stod(rows[i][1]), std::stod(rows[i - 1][1])) << to_string(system) << " row " << i;
        }
    }
    SweepOptions bad;
    bad.d_max = 0;
    EXPECT_THROW(run_sweep(SweepKind::line_convergence, bad), DomainError);
}
