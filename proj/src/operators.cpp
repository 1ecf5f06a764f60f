#include "qdigits/operators.hpp"

#include "qdigits/errors.hpp"

#include "json.hpp"

#include <array>

namespace qdigits {

namespace {

constexpr std::array<std::pair<OperatorKind, const char *>, 8> kind_names{{
    {OperatorKind::identity, "identity"},
    {OperatorKind::x, "x"},
    {OperatorKind::p, "p"},
    {OperatorKind::x_digit, "x-digit"},
    {OperatorKind::p_digit, "p-digit"},
    {OperatorKind::shift, "shift"},
    {OperatorKind::phase, "phase"},
    {OperatorKind::projector, "projector"},
}};

bool uses_index(OperatorKind kind) {
    return kind == OperatorKind::x_digit || kind == OperatorKind::p_digit;
}

bool uses_amount(OperatorKind kind) {
    return kind == OperatorKind::shift || kind == OperatorKind::phase || kind == OperatorKind::projector;
}

} // namespace

OperatorKind parse_operator_kind(const std::string &text) {
    for (const auto &[kind, name] : kind_names) {
        if (text == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown operator '" + text + "'");
}

std::string to_string(OperatorKind kind) {
    for (const auto &[k, name] : kind_names) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

Basis basis_for(const LatticeSpec &spec, const OperatorRequest &request) {
    const DigitSystem system{spec.base(), request.flavor};
    return Basis(spec, request.representation.value_or(default_representation(system)));
}

OperatorMatrix build_operator(const LatticeSpec &spec, const OperatorRequest &request) {
    require_dense(spec);
    const DigitSystem system{spec.base(), request.flavor};
    const Basis basis = basis_for(spec, request);
    switch (request.kind) {
    case OperatorKind::identity:
        return OperatorMatrix::Identity(spec.size(), spec.size());
    case OperatorKind::x:
        return reconstruct_coordinate_diagonal(basis, system, request.renormalized);
    case OperatorKind::p:
        return reconstruct_momentum(basis, system);
    case OperatorKind::x_digit:
        return coordinate_digit_diagonal(basis, system, request.index);
    case OperatorKind::p_digit:
        return momentum_digit_operator(basis, system, request.index);
    case OperatorKind::shift: {
        const Rational steps = request.amount / spec.dx();
        if (denominator_of(steps) == 1) {
            return shift_matrix(basis, numerator_of(steps).convert_to<std::int64_t>());
        }
        return arbitrary_shift(basis, request.amount);
    }
    case OperatorKind::phase:
        return momentum_phase_matrix(basis, request.amount);
    case OperatorKind::projector:
        return momentum_projector(basis, request.amount);
    }
    throw std::invalid_argument("unhandled operator kind");
}

std::string matrix_document(const LatticeSpec &spec, const OperatorRequest &request, const OperatorMatrix &m) {
    const DigitSystem system{spec.base(), request.flavor};
    const Basis basis = basis_for(spec, request);
    nlohmann::json meta{
        {"q", spec.base()},
        {"n", spec.digits()},
        {"n_minus", spec.n_minus()},
        {"system", to_string(system)},
        {"op", to_string(request.kind)},
        {"index", uses_index(request.kind) ? nlohmann::json(request.index) : nlohmann::json(nullptr)},
        {"basis_order", "rows ordered by decreasing x"},
        {"boundary", to_string(spec.boundary())},
        {"offset", spec.half_step() ? "half-step" : "none"},
        {"representation", to_string(basis.representation())},
    };
    if (uses_amount(request.kind)) {
        meta["amount"] = to_string(request.amount);
    }
    if (request.kind == OperatorKind::x) {
        meta["renormalized"] = request.renormalized;
    }
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    const nlohmann::json doc{{"meta", meta}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    return doc.dump();
}

OperatorMatrix parse_matrix_document(const std::string &json) {
    const auto doc = nlohmann::json::parse(json);
    const auto rows = doc.at("rows").get<Eigen::Index>();
    const auto cols = doc.at("cols").get<Eigen::Index>();
    const auto &entries = doc.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
        throw DimensionMismatch("matrix document has " + std::to_string(entries.size()) + " entries for " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    }
    OperatorMatrix m(rows, cols);
    for (Eigen::Index k = 0; k < rows * cols; ++k) {
        const auto &e = entries[static_cast<std::size_t>(k)];
        m(k / cols, k % cols) = complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return m;
}

} // namespace qdigits
