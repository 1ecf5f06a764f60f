#include "qdigits/lattice_spec.hpp"

#include "qdigits/errors.hpp"

#include <sstream>

namespace qdigits {

namespace {

constexpr int max_digits(int base) {
    return base == 2 ? 30 : 19;
}

} // namespace

LatticeSpec::LatticeSpec(int base, int digits, int n_minus, Boundary boundary, Offset offset)
    : base_(base), digits_(digits), n_minus_(n_minus), boundary_(boundary), offset_(offset), size_(1) {
    if (base != 2 && base != 3) {
        throw DomainError("lattice base must be 2 or 3, got " + std::to_string(base));
    }
    if (digits < 0 || digits > max_digits(base)) {
        throw DomainError("digit count n must lie in [0, " + std::to_string(max_digits(base)) + "], got " +
                          std::to_string(digits));
    }
    if (n_minus < 0 || n_minus > digits) {
        throw DomainError("fractional digit count must satisfy 0 <= n_minus <= n, got n_minus=" +
                          std::to_string(n_minus) + " n=" + std::to_string(digits));
    }
    if (base != 2 && (boundary == Boundary::antiperiodic || offset == Offset::half_step)) {
        throw DomainError("antiperiodic boundary and half-step offset require base 2");
    }
    size_ = ipow(base, static_cast<unsigned>(digits));
}

LatticeSpec LatticeSpec::binary_symmetric(int digits, int n_minus) {
    return {2, digits, n_minus, Boundary::antiperiodic, Offset::half_step};
}

std::int64_t LatticeSpec::window_low(Representation rep) const noexcept {
    return rep == Representation::nonnegative ? 0 : -(size_ / 2);
}

std::string LatticeSpec::describe() const {
    std::ostringstream out;
    out << "q=" << base_ << " n=" << digits_ << " n_minus=" << n_minus_ << " N=" << size_
        << " boundary=" << to_string(boundary_) << (half_step() ? " offset=half-step" : "");
    return out.str();
}

Rational coordinate_of(const LatticeSpec &spec, LatticeValue x) {
    Rational k(x.k);
    if (spec.half_step()) {
        k += Rational(BigInt(1), BigInt(2));
    }
    return k * spec.dx();
}

LatticeValue lattice_value_of(const LatticeSpec &spec, const Rational &value) {
    Rational units = value / spec.dx();
    if (spec.half_step()) {
        units -= Rational(BigInt(1), BigInt(2));
    }
    if (denominator_of(units) != 1) {
        throw DomainError(to_string(value) + " is not a node of the lattice " + spec.describe());
    }
    const BigInt k = numerator_of(units);
    if (k < 0 || k >= spec.size()) {
        throw DomainError(to_string(value) + " lies outside the nonnegative window of " + spec.describe());
    }
    return LatticeValue{k.convert_to<std::int64_t>()};
}

std::string to_string(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "antiperiodic";
}

std::string to_string(Representation r) {
    return r == Representation::nonnegative ? "nonnegative" : "signed";
}

} // namespace qdigits
