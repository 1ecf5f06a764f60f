#include "qdigits/number_systems.hpp"

#include "qdigits/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qdigits {

namespace {

const Rational half(BigInt(1), BigInt(2));

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

void require_lattice_node(const LatticeSpec &spec, LatticeValue x) {
    if (x.k < 0 || x.k >= spec.size()) {
        throw DomainError("index " + std::to_string(x.k) + " is not a node of " + spec.describe());
    }
}

void require_plain_lattice(const LatticeSpec &spec, const char *what) {
    if (spec.half_step()) {
        throw DomainError(std::string(what) + " is defined on lattices without the half-step offset");
    }
}

// Nonsymmetric lattice digits of k, lowest first.
std::vector<std::int64_t> lattice_digits(const LatticeSpec &spec, LatticeValue x) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(spec.digits()));
    std::int64_t k = x.k;
    for (auto &d : out) {
        d = k % spec.base();
        k /= spec.base();
    }
    return out;
}

} // namespace

std::vector<DigitSystem> all_digit_systems() {
    return {DigitSystem::binary_nonsymmetric(), DigitSystem::binary_symmetric(), DigitSystem::ternary_nonsymmetric(),
            DigitSystem::ternary_symmetric()};
}

std::string to_string(DigitSystem system) {
    return std::string(system.base == 2 ? "binary" : "ternary") + "-" +
           (system.symmetric() ? "symmetric" : "nonsymmetric");
}

Flavor parse_flavor(const std::string &text) {
    if (text == "symmetric" || text == "sym") {
        return Flavor::symmetric;
    }
    if (text == "nonsymmetric" || text == "non-symmetric" || text == "ns") {
        return Flavor::nonsymmetric;
    }
    throw std::invalid_argument("unknown system flavor '" + text + "'");
}

std::vector<Rational> alphabet(DigitSystem system) {
    if (system.base == 2) {
        if (system.symmetric()) {
            return {-half, half};
        }
        return {Rational(0), Rational(1)};
    }
    if (system.symmetric()) {
        return {Rational(-1), Rational(0), Rational(1)};
    }
    return {Rational(0), Rational(1), Rational(2)};
}

Rational tail_value(DigitSystem system) {
    return (system.base == 2 && system.symmetric()) ? -half : Rational(0);
}

Rational digit(DigitSystem system, int s, const Rational &x) {
    const Rational scaled = x / power(system.base, s);
    if (system.base == 3 && system.symmetric()) {
        const BigInt y = floor_of(scaled + half);
        return Rational(mod_floor(y + 1, 3) - 1);
    }
    const Rational d(mod_floor(floor_of(scaled), system.base));
    return system.symmetric() ? d - half : d;
}

double lattice_digit(DigitSystem system, int j, std::int64_t k) {
    const std::int64_t qj = ipow(system.base, static_cast<unsigned>(j));
    if (system.base == 3 && system.symmetric()) {
        const std::int64_t y = floor_div(2 * k + qj, 2 * qj);
        return static_cast<double>(mod_pos(y + 1, 3) - 1);
    }
    const auto d = static_cast<double>(mod_pos(floor_div(k, qj), system.base));
    return system.symmetric() ? d - 0.5 : d;
}

Rational DigitSequence::at(int s) const {
    if (s < s_min || s > s_max) {
        return tail_value(system);
    }
    return digits[static_cast<std::size_t>(s - s_min)];
}

DigitSequence expand(DigitSystem system, const Rational &x, int s_min, int s_max) {
    if (s_min > s_max) {
        throw DomainError("expand requires s_min <= s_max");
    }
    DigitSequence seq{system, s_min, s_max, {}};
    seq.digits.reserve(static_cast<std::size_t>(s_max - s_min + 1));
    for (int s = s_min; s <= s_max; ++s) {
        seq.digits.push_back(digit(system, s, x));
    }
    return seq;
}

Rational plain_sum(const DigitSequence &seq) {
    Rational total(0);
    for (int s = seq.s_min; s <= seq.s_max; ++s) {
        total += seq.at(s) * power(seq.system.base, s);
    }
    return total;
}

Rational renormalized_sum_line(DigitSystem system, const Rational &x, int s_max) {
    const int q = system.base;
    if (!is_q_adic(x, q)) {
        throw UnsupportedOperand(to_string(x) + " has no finite base-" + std::to_string(q) + " expansion");
    }
    if (abs(x) >= power(q, s_max)) {
        throw DomainError("renormalized sum needs |x| < q^s_max; got x=" + to_string(x) +
                          " s_max=" + std::to_string(s_max));
    }
    const int lo = -q_adic_depth(x, q) - 1;
    Rational total(0);
    Rational below = digit(system, lo - 1, x);
    for (int s = lo; s <= s_max + 1; ++s) {
        const Rational here = digit(system, s, x);
        total += (below - here) * power(q, s);
        below = here;
    }
    return total / Rational(q - 1);
}

Rational geometric_renorm_constant(int q) {
    if (q != 2 && q != 3) {
        throw DomainError("base must be 2 or 3");
    }
    return Rational(BigInt(-1), BigInt(q - 1));
}

Rational lattice_renormalize_method2(const LatticeSpec &spec, LatticeValue x) {
    require_plain_lattice(spec, "method 2");
    require_lattice_node(spec, x);
    const auto digits = lattice_digits(spec, x);
    if (digits.empty()) {
        return Rational(0);
    }
    std::int64_t units = 0;
    for (std::size_t j = 0; j + 1 < digits.size(); ++j) {
        units += digits[j] * ipow(spec.base(), static_cast<unsigned>(j));
    }
    std::int64_t top = digits.back();
    if (top == spec.base() - 1) {
        top = -1;
    }
    units += top * ipow(spec.base(), static_cast<unsigned>(digits.size() - 1));
    return Rational(units) * spec.dx();
}

Rational lattice_telescoped_sum(const LatticeSpec &spec, LatticeValue x) {
    require_plain_lattice(spec, "the telescoped lattice sum");
    require_lattice_node(spec, x);
    const auto digits = lattice_digits(spec, x);
    std::int64_t twice = 0;
    std::int64_t below = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        twice += (below - digits[j]) * ipow(spec.base(), static_cast<unsigned>(j));
        below = digits[j];
    }
    return Rational(BigInt(twice), BigInt(spec.base() - 1)) * spec.dx();
}

Rational lattice_renormalize_method1_binary(const LatticeSpec &spec, LatticeValue x) {
    if (spec.base() != 2) {
        throw UnsupportedOperand("method 1 is not a valid lattice renormalization for base 3");
    }
    return lattice_telescoped_sum(spec, x);
}

std::pair<LatticeValue, Rational> ternary_method1_witness(const LatticeSpec &spec) {
    if (spec.base() != 3 || spec.digits() < 1) {
        throw DomainError("the method 1 witness needs a ternary lattice with n >= 1");
    }
    const LatticeValue ones{(spec.size() - 1) / 2};
    return {ones, lattice_telescoped_sum(spec, ones)};
}

} // namespace qdigits
