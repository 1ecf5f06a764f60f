#include "qdigits/verification.hpp"

#include "qdigits/errors.hpp"

#include "json.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace qdigits {

namespace {

constexpr complex I{0.0, 1.0};

class Recorder {
  public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void check(std::string name, double deviation, double tolerance) {
        const bool ok = std::isfinite(deviation) && deviation <= tolerance;
        report_.checks.push_back({std::move(name), ok, deviation, tolerance});
    }

    VerifyReport take() { return std::move(report_); }

  private:
    VerifyReport report_;
};

std::string label(DigitSystem system) {
    return to_string(system);
}

OperatorMatrix circulant(std::int64_t N, const std::function<complex(std::int64_t)> &entry) {
    OperatorMatrix m(N, N);
    for (std::int64_t i = 0; i < N; ++i) {
        for (std::int64_t j = 0; j < N; ++j) {
            m(i, j) = entry(((i - j) % N + N) % N);
        }
    }
    return m;
}

complex E(std::int64_t n) {
    return 1.0 / (std::exp(-2.0 * std::numbers::pi * I * static_cast<double>(n) / 9.0) - 1.0);
}

double G(std::int64_t n) {
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign / (2.0 * std::sqrt(3.0) * std::sin(std::numbers::pi * static_cast<double>(n) / 9.0));
}

OperatorMatrix diagonal_of(const std::vector<double> &values) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        d(static_cast<Eigen::Index>(i)) = values[i];
    }
    return d.asDiagonal();
}

OperatorMatrix spectral_function(const Basis &basis, const std::vector<double> &values) {
    const OperatorMatrix F = dft_matrix(basis);
    return F * diagonal_of(values) * F.adjoint();
}

double exact_gap(const Rational &a, const Rational &b) {
    return a == b ? 0.0 : std::max(std::fabs(to_double(a - b)), std::numeric_limits<double>::min());
}

void examples_suite(Recorder &rec, const VerifyOptions &opt) {
    const auto ts = DigitSystem::ternary_symmetric();
    const auto tn = DigitSystem::ternary_nonsymmetric();
    {
        const LatticeSpec spec(3, 1, 0);
        const Basis basis = default_basis(spec, ts);
        rec.check("example ternary-symmetric n=1 x", max_abs_difference(reconstruct_coordinate(basis, ts, false),
                                                                         diagonal_of({1, 0, -1})),
                  1e-12);
        rec.check("example ternary-symmetric n=1 p[-1]",
                  max_abs_difference(momentum_digit_operator(basis, ts, -1), example_ternary_symmetric_n1_p()), 1e-12);
    }
    {
        const LatticeSpec spec(3, 1, 0);
        const Basis basis = default_basis(spec, tn);
        rec.check("example ternary-nonsymmetric n=1 x",
                  max_abs_difference(reconstruct_coordinate(basis, tn, false), diagonal_of({2, 1, 0})), 1e-12);
        rec.check("example ternary-nonsymmetric n=1 p[-1] (reference matrix)",
                  max_abs_difference(momentum_digit_operator(basis, tn, -1), example_ternary_nonsymmetric_n1_p()),
                  1e-12);
    }
    {
        const LatticeSpec spec(3, 2, 0);
        const Basis basis = default_basis(spec, tn);
        rec.check("example ternary-nonsymmetric n=2 x",
                  max_abs_difference(reconstruct_coordinate(basis, tn, false), diagonal_of({8, 7, 6, 5, 4, 3, 2, 1, 0})),
                  1e-12);
        rec.check("example ternary-nonsymmetric n=2 x[0]",
                  max_abs_difference(coordinate_digit_operator(basis, tn, 0), diagonal_of({2, 1, 0, 2, 1, 0, 2, 1, 0})),
                  1e-12);
        rec.check("example ternary-nonsymmetric n=2 x[1]",
                  max_abs_difference(coordinate_digit_operator(basis, tn, 1), diagonal_of({2, 2, 2, 1, 1, 1, 0, 0, 0})),
                  1e-12);
        rec.check("example ternary-nonsymmetric n=2 p[-1]",
                  max_abs_difference(momentum_digit_operator(basis, tn, -1), example_ternary_nonsymmetric_n2(-1)),
                  opt.tolerance);
        rec.check("example ternary-nonsymmetric n=2 p[-2]",
                  max_abs_difference(momentum_digit_operator(basis, tn, -2), example_ternary_nonsymmetric_n2(-2)),
                  opt.tolerance);
        rec.check("example ternary-nonsymmetric n=2 p",
                  max_abs_difference(reconstruct_momentum(basis, tn), example_ternary_nonsymmetric_n2(0)), opt.tolerance);
    }
    {
        const LatticeSpec spec(3, 2, 0);
        const Basis basis = default_basis(spec, ts);
        rec.check("example ternary-symmetric n=2 x",
                  max_abs_difference(reconstruct_coordinate(basis, ts, false),
                                     diagonal_of({4, 3, 2, 1, 0, -1, -2, -3, -4})),
                  1e-12);
        rec.check("example ternary-symmetric n=2 x[0]",
                  max_abs_difference(coordinate_digit_operator(basis, ts, 0),
                                     diagonal_of({1, 0, -1, 1, 0, -1, 1, 0, -1})),
                  1e-12);
        rec.check("example ternary-symmetric n=2 x[1]",
                  max_abs_difference(coordinate_digit_operator(basis, ts, 1),
                                     diagonal_of({1, 1, 1, 0, 0, 0, -1, -1, -1})),
                  1e-12);
        rec.check("example ternary-symmetric n=2 p[-1]",
                  max_abs_difference(momentum_digit_operator(basis, ts, -1), example_ternary_symmetric_n2(-1)),
                  opt.tolerance);
        rec.check("example ternary-symmetric n=2 p[-2]",
                  max_abs_difference(momentum_digit_operator(basis, ts, -2), example_ternary_symmetric_n2(-2)),
                  opt.tolerance);
        rec.check("example ternary-symmetric n=2 p",
                  max_abs_difference(reconstruct_momentum(basis, ts), example_ternary_symmetric_n2(0)), opt.tolerance);
    }
}

void oracle_suite(Recorder &rec, const VerifyOptions &opt) {
    for (const auto system : all_digit_systems()) {
        double momentum_gap = 0, coordinate_gap = 0, hermitian = 0, eigen = 0, commuting = 0;
        double x_recon = 0, p_recon = 0;
        std::int64_t multiplicity = 0;
        for (const auto &spec : lattices_for(system, opt.max_n)) {
            const Basis basis = default_basis(spec, system);
            std::vector<OperatorMatrix> xs, ps;
            for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
                ps.push_back(momentum_digit_operator(basis, system, r));
                momentum_gap = std::max(momentum_gap,
                                        max_abs_difference(ps.back(), momentum_digit_spectral(basis, system, r)));
            }
            for (int s = -spec.n_minus(); s <= spec.n_plus() - 1; ++s) {
                xs.push_back(coordinate_digit_operator(basis, system, s));
                coordinate_gap = std::max(coordinate_gap,
                                          max_abs_difference(xs.back(), coordinate_digit_diagonal(basis, system, s)));
            }
            for (const auto *family : {&xs, &ps}) {
                for (std::size_t a = 0; a < family->size(); ++a) {
                    const auto &op = (*family)[a];
                    hermitian = std::max(hermitian, hermiticity_defect(op));
                    const auto sc = spectrum_check(op, system);
                    eigen = std::max(eigen, sc.distance);
                    multiplicity = std::max(multiplicity, sc.multiplicity_error);
                    for (std::size_t b = a + 1; b < family->size(); ++b) {
                        commuting = std::max(commuting, max_abs(commutator(op, (*family)[b])));
                    }
                }
            }
            std::vector<double> xv, pv;
            for (std::int64_t i = 0; i < spec.size(); ++i) {
                xv.push_back(to_double(plain_digit_sum_value(system, spec, basis.doubled_units(i), false)));
                pv.push_back(to_double(plain_digit_sum_value(
                    system, spec, momentum_doubled_units(spec, Representation::nonnegative, i), true)));
            }
            x_recon = std::max(x_recon, max_abs_difference(reconstruct_coordinate(basis, system, false), diagonal_of(xv)));
            p_recon = std::max(p_recon, max_abs_difference(reconstruct_momentum(basis, system), spectral_function(basis, pv)));
        }
        const std::string name = label(system);
        rec.check("oracle " + name + " momentum digits: shift expansion vs spectral", momentum_gap, opt.tolerance);
        rec.check("oracle " + name + " coordinate digits: shift expansion vs digit table", coordinate_gap,
                  opt.tolerance);
        rec.check("oracle " + name + " digit operators hermitian", hermitian, hermitian_tolerance);
        rec.check("oracle " + name + " eigenvalues in alphabet", eigen, eigenvalue_tolerance);
        rec.check("oracle " + name + " eigenvalue multiplicity N/q", static_cast<double>(multiplicity), 0.0);
        rec.check("oracle " + name + " same-observable digits commute", commuting, opt.tolerance);
        rec.check("oracle " + name + " coordinate reconstruction", x_recon, opt.tolerance);
        rec.check("oracle " + name + " momentum reconstruction", p_recon, opt.tolerance);
    }
}

void commutators_suite(Recorder &rec, const VerifyOptions &opt) {
    for (const auto system : all_digit_systems()) {
        double dd = 0, vanish = 0, xd = 0, xp = 0, sum_rule = 0, shape = 0;
        std::int64_t silent = 0;
        for (const auto &spec : lattices_for(system, opt.max_n)) {
            const Basis basis = default_basis(spec, system);
            for (int s = -spec.n_minus(); s <= spec.n_plus() - 1; ++s) {
                for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
                    const auto rep = digit_digit_report(basis, system, s, r);
                    dd = std::max(dd, rep.max_abs_difference);
                    const double size = max_abs(rep.direct);
                    if (s + r <= -2) {
                        vanish = std::max(vanish, size);
                    } else if (size <= opt.tolerance) {
                        ++silent;
                    }
                }
            }
            OperatorMatrix weighted = OperatorMatrix::Zero(spec.size(), spec.size());
            for (int r = -spec.n_plus(); r <= spec.n_minus() - 1; ++r) {
                const auto rep = coordinate_digit_report(basis, system, r);
                xd = std::max(xd, rep.max_abs_difference);
                shape = std::max({shape, max_abs(rep.series + rep.series.adjoint()), std::abs(rep.series.trace())});
                weighted += std::pow(static_cast<double>(system.base), r) * rep.series;
            }
            const auto full = coordinate_momentum_report(basis, system);
            xp = std::max(xp, full.max_abs_difference);
            shape = std::max({shape, max_abs(full.series + full.series.adjoint()), std::abs(full.series.trace())});
            sum_rule = std::max(sum_rule, max_abs_difference(weighted, full.series));
        }
        const std::string name = label(system);
        rec.check("commutator " + name + " digit-digit series vs direct", dd, opt.tolerance);
        rec.check("commutator " + name + " vanishes for s+r<=-2", vanish, opt.tolerance);
        rec.check("commutator " + name + " nonzero for s+r>=-1 (count of vanishing pairs)", static_cast<double>(silent),
                  0.0);
        rec.check("commutator " + name + " coordinate-digit series vs direct", xd, opt.tolerance);
        rec.check("commutator " + name + " coordinate-momentum series vs direct", xp, opt.tolerance);
        rec.check("commutator " + name + " anti-hermitian and traceless", shape, opt.tolerance);
        rec.check("commutator " + name + " digit sum rule", sum_rule, opt.tolerance);
    }
    for (const int q : {2, 3}) {
        double deviation = 0;
        for (int n = 0; n <= 6; ++n) {
            for (int nm = 0; nm <= n; ++nm) {
                deviation = std::max(deviation, shift_sum_identity(LatticeSpec(q, n, nm)).deviation);
            }
        }
        rec.check("shift sum minus zero mode vanishes, base " + std::to_string(q) + ", n<=6", deviation, opt.tolerance);
    }
}

Rational random_finite_fraction(std::mt19937_64 &rng, int q) {
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<int> depth(0, 12);
    return Rational(BigInt(num(rng)), int_power(q, static_cast<unsigned>(depth(rng))));
}

int headroom(const Rational &x, int q) {
    int s = 0;
    while (abs(x) >= power(q, s)) {
        ++s;
    }
    return s;
}

void renorm_suite(Recorder &rec, const VerifyOptions &opt) {
    std::mt19937_64 rng(20240611);
    for (const auto system : all_digit_systems()) {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const Rational x = random_finite_fraction(rng, system.base);
            worst = std::max(worst, exact_gap(renormalized_sum_line(system, x, headroom(x, system.base)), x));
        }
        rec.check("renormalized line sum " + label(system) + " reproduces 1000 random values", worst, 0.0);
    }
    rec.check("geometric renormalization constant base 2",
              exact_gap(geometric_renorm_constant(2), Rational(-1)), 0.0);
    rec.check("geometric renormalization constant base 3",
              exact_gap(geometric_renorm_constant(3), make_rational(-1, 2)), 0.0);

    double methods = 0;
    for (int n = 0; n <= 12; ++n) {
        for (int nm = 0; nm <= n; ++nm) {
            const LatticeSpec spec(2, n, nm);
            for (std::int64_t k = 0; k < spec.size(); ++k) {
                methods = std::max(methods, exact_gap(lattice_renormalize_method1_binary(spec, {k}),
                                                      lattice_renormalize_method2(spec, {k})));
            }
        }
    }
    rec.check("binary method 1 equals method 2 on every node, n<=12", methods, 0.0);

    double ends = 0, image = 0;
    for (const int q : {2, 3}) {
        for (int n = 1; n <= std::max(opt.max_n, 2); ++n) {
            for (int nm = 0; nm <= n; ++nm) {
                const LatticeSpec spec(q, n, nm);
                ends = std::max(ends, exact_gap(lattice_renormalize_method2(spec, {spec.size() - 1}), -spec.dx()));
                ends = std::max(ends, exact_gap(lattice_renormalize_method2(spec, {0}), Rational(0)));
                const std::int64_t low = q == 3 ? -spec.size() / 3 : -spec.size() / 2;
                std::vector<bool> hit(static_cast<std::size_t>(spec.size()), false);
                for (std::int64_t k = 0; k < spec.size(); ++k) {
                    const Rational units = lattice_renormalize_method2(spec, {k}) / spec.dx();
                    const std::int64_t slot = numerator_of(units).convert_to<std::int64_t>() - low;
                    if (denominator_of(units) != 1 || slot < 0 || slot >= spec.size() || hit[static_cast<std::size_t>(slot)]) {
                        image = 1;
                        continue;
                    }
                    hit[static_cast<std::size_t>(slot)] = true;
                }
            }
        }
    }
    rec.check("method 2 maps (N-1)dx to -dx and 0 to 0", ends, 0.0);
    rec.check("method 2 is a bijection onto the signed set", image, 0.0);

    double witness = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int nm = 0; nm <= n; ++nm) {
            const LatticeSpec spec(3, n, nm);
            const auto [node, value] = ternary_method1_witness(spec);
            witness = std::max(witness, exact_gap(value, -spec.dx() / 2));
            if (coordinate_of(spec, node) != Rational((spec.size() - 1) / 2) * spec.dx()) {
                witness = 1;
            }
        }
    }
    rec.check("ternary method 1 sends the all-ones node to -dx/2", witness, 0.0);

    for (const auto system : all_digit_systems()) {
        double recon = 0;
        for (const auto &spec : lattices_for(system, opt.max_n)) {
            const Basis basis(spec);
            const OperatorMatrix m = reconstruct_coordinate(basis, system, true);
            for (std::int64_t i = 0; i < spec.size(); ++i) {
                const Rational x = basis.coordinate(i);
                Rational expected = x >= spec.period() / 2 ? x - spec.period() : x;
                if (!system.symmetric()) {
                    expected = lattice_renormalize_method2(spec, {basis.index_at(i)});
                } else if (system.base == 3 && 2 * basis.index_at(i) > spec.size() - 1) {
                    expected = x - spec.period();
                } else if (system.base == 3) {
                    expected = x;
                }
                recon = std::max(recon, std::abs(m(i, i) - to_double(expected)));
            }
        }
        rec.check("renormalized coordinate reconstruction " + label(system), recon, opt.tolerance);
    }
}

void integral_suite(Recorder &rec) {
    for (const auto &[text, x] : std::vector<std::pair<std::string, double>>{
             {"1/3", 1.0 / 3.0}, {"1", 1.0}, {"2", 2.0}, {"9", 9.0}, {"17/9", 17.0 / 9.0}}) {
        rec.check("ternary integral reproduces x=" + text, std::fabs(ternary_integral(x, -40) - x),
                  integral_tolerance);
    }
    rec.check("ternary integral scale invariance x=0.7",
              std::fabs(ternary_integral(3 * 0.7, -40) / 3 - ternary_integral(0.7, -40)), integral_tolerance);
    rec.check("ln 3 series partial sum K=1e6", std::fabs(ln3_series_partial(1000000) - std::log(3.0)), ln3_tolerance);
    for (const double x : {-2.0, -1.0 / 3.0, -17.0 / 9.0, 1.0, 2.0, 9.0}) {
        rec.check("signed renormalized integral reproduces x=" + std::to_string(x),
                  std::fabs(renorm_integral_signed(x, -40, 5) - x), integral_tolerance);
    }
}

} // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::optional<std::string> VerifyReport::first_failure() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return c.name;
        }
    }
    return std::nullopt;
}

Suite parse_suite(const std::string &text) {
    if (text == "examples") return Suite::examples;
    if (text == "oracle") return Suite::oracle;
    if (text == "commutators") return Suite::commutators;
    if (text == "renorm") return Suite::renorm;
    if (text == "integral") return Suite::integral;
    if (text == "all") return Suite::all;
    throw std::invalid_argument("unknown verification suite '" + text + "'");
}

std::string to_string(Suite suite) {
    switch (suite) {
    case Suite::examples: return "examples";
    case Suite::oracle: return "oracle";
    case Suite::commutators: return "commutators";
    case Suite::renorm: return "renorm";
    case Suite::integral: return "integral";
    case Suite::all: return "all";
    }
    return "unknown";
}

VerifyReport run_suite(Suite suite, const VerifyOptions &options) {
    if (options.max_n < 1 || options.max_n > 6) {
        throw DomainError("max_n must lie in [1, 6]");
    }
    if (!(options.tolerance > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    Recorder rec(to_string(suite));
    const bool all = suite == Suite::all;
    if (all || suite == Suite::examples) examples_suite(rec, options);
    if (all || suite == Suite::oracle) oracle_suite(rec, options);
    if (all || suite == Suite::commutators) commutators_suite(rec, options);
    if (all || suite == Suite::renorm) renorm_suite(rec, options);
    if (all || suite == Suite::integral) integral_suite(rec);
    return rec.take();
}

std::string to_json(const VerifyReport &report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"deviation", c.deviation}, {"tolerance", c.tolerance}});
    }
    nlohmann::json doc{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}};
    const auto failure = report.first_failure();
    doc["first_failure"] = failure ? nlohmann::json(*failure) : nlohmann::json(nullptr);
    return doc.dump(2);
}

OperatorMatrix example_ternary_symmetric_n1_p() {
    OperatorMatrix m(3, 3);
    m << 0, I, -I, -I, 0, I, I, -I, 0;
    return m / std::sqrt(3.0);
}

OperatorMatrix example_ternary_nonsymmetric_n1_p() {
    const complex a(1.0, -std::sqrt(3.0));
    const complex b(1.0, std::sqrt(3.0));
    OperatorMatrix m(3, 3);
    m << 6, a, b, b, 6, a, a, b, 6;
    return m / 6.0;
}

OperatorMatrix example_ternary_nonsymmetric_n2(int r) {
    switch (r) {
    case -1:
        return circulant(9, [](std::int64_t k) -> complex { return k == 0 ? 3.0 : (k % 3 == 0 ? 0.0 : E(k)); }) / 3.0;
    case -2:
        return circulant(9, [](std::int64_t k) -> complex {
            return k == 0 ? complex(1.0) : (k % 3 == 0 ? 3.0 * E(k) : complex(0.0));
        });
    case 0:
        return circulant(9, [](std::int64_t k) -> complex {
                   return k == 0 ? complex(4.0) : (k % 3 == 0 ? 3.0 * E(k) : E(k));
               }) /
               9.0;
    default:
        throw DomainError("worked example digits are r = -1, -2 (or 0 for the full momentum)");
    }
}

OperatorMatrix example_ternary_symmetric_n2(int r) {
    const complex pre = 1.0 / (std::sqrt(3.0) * I);
    switch (r) {
    case -1:
        return pre * circulant(9, [](std::int64_t k) -> complex { return k % 3 == 0 ? 0.0 : G(k); });
    case -2:
        return -pre * circulant(9, [](std::int64_t k) -> complex { return k == 6 ? 1.0 : (k == 3 ? -1.0 : 0.0); });
    case 0:
        return pre / 9.0 * circulant(9, [](std::int64_t k) -> complex {
                   return k == 0 ? 0.0 : (k == 6 ? -1.0 : (k == 3 ? 1.0 : 3.0 * G(k)));
               });
    default:
        throw DomainError("worked example digits are r = -1, -2 (or 0 for the full momentum)");
    }
}

SpectrumCheck spectrum_check(const OperatorMatrix &hermitian, DigitSystem system) {
    const OperatorMatrix sym = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(sym, Eigen::EigenvaluesOnly);
    const auto letters = alphabet(system);
    std::vector<std::int64_t> counts(letters.size(), 0);
    SpectrumCheck out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double ev = solver.eigenvalues()(i);
        std::size_t best = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < letters.size(); ++a) {
            const double gap = std::fabs(ev - to_double(letters[a]));
            if (gap < best_gap) {
                best_gap = gap;
                best = a;
            }
        }
        out.distance = std::max(out.distance, best_gap);
        ++counts[best];
    }
    const std::int64_t expected = sym.rows() / system.base;
    for (const auto c : counts) {
        out.multiplicity_error = std::max(out.multiplicity_error, std::abs(c - expected));
    }
    return out;
}

double hermiticity_defect(const OperatorMatrix &m) {
    return max_abs(m - m.adjoint());
}

std::vector<LatticeSpec> lattices_for(DigitSystem system, int max_n) {
    std::vector<LatticeSpec> out;
    const bool binary_symmetric = system.base == 2 && system.symmetric();
    for (int n = 1; n <= max_n; ++n) {
        for (int nm = 0; nm <= n; ++nm) {
            out.push_back(binary_symmetric ? LatticeSpec::binary_symmetric(n, nm) : LatticeSpec(system.base, n, nm));
        }
    }
    return out;
}

} // namespace qdigits
