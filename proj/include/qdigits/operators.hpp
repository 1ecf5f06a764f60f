#pragma once

#include "qdigits/digit_operators.hpp"

#include <optional>
#include <string>

namespace qdigits {

enum class OperatorKind { identity, x, p, x_digit, p_digit, shift, phase, projector };

OperatorKind parse_operator_kind(const std::string &text);
std::string to_string(OperatorKind kind);

struct OperatorRequest {
    OperatorKind kind = OperatorKind::identity;
    Flavor flavor = Flavor::symmetric;
    int index = 0;
    // Shift length A, phase B or projector momentum p.
    Rational amount{0};
    std::optional<Representation> representation;
    bool renormalized = false;
};

Basis basis_for(const LatticeSpec &spec, const OperatorRequest &request);

// x and p are the digit-weighted sums, x and x-digit from the exact digit
// tables, p and p-digit from the shift expansions. shift uses the permutation matrix when
// A is a multiple of dx and the spectral construction otherwise.
OperatorMatrix build_operator(const LatticeSpec &spec, const OperatorRequest &request);

// Self-describing JSON: meta{q, n, n_minus, system, op, index, basis_order,
// boundary, representation, ...}, rows, cols, entries as row-major [re, im].
std::string matrix_document(const LatticeSpec &spec, const OperatorRequest &request, const OperatorMatrix &m);

// Entries of a document produced by matrix_document.
OperatorMatrix parse_matrix_document(const std::string &json);

} // namespace qdigits
