#pragma once

#include "qdigits/commutators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdigits {

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::optional<std::string> first_failure() const;
};

enum class Suite { examples, oracle, commutators, renorm, integral, all };

Suite parse_suite(const std::string &text);
std::string to_string(Suite suite);

struct VerifyOptions {
    int max_n = 4;
    double tolerance = 1e-10;
};

inline constexpr double hermitian_tolerance = 1e-12;
inline constexpr double eigenvalue_tolerance = 1e-9;
inline constexpr double integral_tolerance = 1e-9;
inline constexpr double ln3_tolerance = 1e-6;

VerifyReport run_suite(Suite suite, const VerifyOptions &options = {});

// {"suite", "passed", "first_failure", "checks": [{name, passed, deviation, tolerance}]}
std::string to_json(const VerifyReport &report);

// Reference matrices of the worked examples, built from their closed forms.
// Rows ordered by decreasing x.
OperatorMatrix example_ternary_symmetric_n1_p();
OperatorMatrix example_ternary_nonsymmetric_n1_p();
OperatorMatrix example_ternary_nonsymmetric_n2(int r); // r = -1, -2, or 0 for the full momentum
OperatorMatrix example_ternary_symmetric_n2(int r);

// Distance of the farthest eigenvalue from the alphabet, and the largest
// deviation of an alphabet value's multiplicity from N/q.
struct SpectrumCheck {
    double distance = 0.0;
    std::int64_t multiplicity_error = 0;
};
SpectrumCheck spectrum_check(const OperatorMatrix &hermitian, DigitSystem system);

double hermiticity_defect(const OperatorMatrix &m);

// Every lattice a digit system lives on with 1 <= n <= max_n and each split.
std::vector<LatticeSpec> lattices_for(DigitSystem system, int max_n);

} // namespace qdigits
