#include "qdigits/qdigits.h"

#include "qdigits/errors.hpp"
#include "qdigits/operators.hpp"
#include "qdigits/sweeps.hpp"
#include "qdigits/verification.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

struct qd_lattice {
    qdigits::LatticeSpec spec;
};

struct qd_matrix {
    qdigits::LatticeSpec spec;
    qdigits::OperatorRequest request;
    qdigits::OperatorMatrix values;
};

namespace {

thread_local std::string last_error;

template <typename F>
qd_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return QD_OK;
    } catch (const qdigits::DomainError &e) {
        last_error = e.what();
        return QD_DOMAIN;
    } catch (const qdigits::UnsupportedOperand &e) {
        last_error = e.what();
        return QD_UNSUPPORTED;
    } catch (const qdigits::DimensionMismatch &e) {
        last_error = e.what();
        return QD_DIMENSION;
    } catch (const nlohmann::json::exception &e) {
        last_error = e.what();
        return QD_INTERNAL;
    } catch (const std::invalid_argument &e) {
        last_error = e.what();
        return QD_INVALID_ARGUMENT;
    } catch (const std::exception &e) {
        last_error = e.what();
        return QD_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return QD_INTERNAL;
    }
}

void require(bool condition, const char *message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

char *duplicate(const std::string &text) {
    char *out = static_cast<char *>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

} // namespace

extern "C" {

qd_status qd_lattice_create(int base, int digits, int n_minus, qd_boundary boundary, qd_lattice **out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = nullptr;
        require(boundary == QD_PERIODIC || boundary == QD_ANTIPERIODIC, "unknown boundary");
        const bool anti = boundary == QD_ANTIPERIODIC;
        qdigits::LatticeSpec spec(base, digits, n_minus,
                                  anti ? qdigits::Boundary::antiperiodic : qdigits::Boundary::periodic,
                                  anti ? qdigits::Offset::half_step : qdigits::Offset::none);
        *out = new qd_lattice{spec};
    });
}

void qd_lattice_destroy(qd_lattice *lattice) { delete lattice; }

qd_status qd_lattice_size(const qd_lattice *lattice, long long *size) {
    return guarded([&] {
        require(lattice != nullptr && size != nullptr, "null argument");
        *size = lattice->spec.size();
    });
}

qd_status qd_build_operator(const qd_lattice *lattice, const qd_operator_request *request, qd_matrix **out) {
    return guarded([&] {
        require(lattice != nullptr && request != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        require(request->op != nullptr, "operator name is null");
        qdigits::OperatorRequest req;
        req.kind = qdigits::parse_operator_kind(request->op);
        req.flavor = request->flavor == nullptr ? qdigits::Flavor::symmetric : qdigits::parse_flavor(request->flavor);
        req.index = request->index;
        if (request->amount != nullptr) {
            req.amount = qdigits::parse_rational(request->amount);
        }
        switch (request->representation) {
        case QD_REPRESENTATION_DEFAULT:
            break;
        case QD_REPRESENTATION_NONNEGATIVE:
            req.representation = qdigits::Representation::nonnegative;
            break;
        case QD_REPRESENTATION_SIGNED:
            req.representation = qdigits::Representation::signed_values;
            break;
        default:
            throw std::invalid_argument("unknown representation");
        }
        req.renormalized = request->renormalized != 0;
        auto values = qdigits::build_operator(lattice->spec, req);
        *out = new qd_matrix{lattice->spec, req, std::move(values)};
    });
}

void qd_matrix_destroy(qd_matrix *matrix) { delete matrix; }

qd_status qd_matrix_dim(const qd_matrix *matrix, long long *rows, long long *cols) {
    return guarded([&] {
        require(matrix != nullptr && rows != nullptr && cols != nullptr, "null argument");
        *rows = matrix->values.rows();
        *cols = matrix->values.cols();
    });
}

qd_status qd_matrix_entry(const qd_matrix *matrix, long long row, long long col, double *re, double *im) {
    return guarded([&] {
        require(matrix != nullptr && re != nullptr && im != nullptr, "null argument");
        if (row < 0 || col < 0 || row >= matrix->values.rows() || col >= matrix->values.cols()) {
            throw qdigits::DimensionMismatch("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                                             ") outside the matrix");
        }
        const auto v = matrix->values(row, col);
        *re = v.real();
        *im = v.imag();
    });
}

qd_status qd_matrix_to_json(const qd_matrix *matrix, char **json) {
    return guarded([&] {
        require(matrix != nullptr && json != nullptr, "null argument");
        *json = duplicate(qdigits::matrix_document(matrix->spec, matrix->request, matrix->values));
    });
}

qd_status qd_verify(const char *suite, int max_n, double tolerance, char **json, int *passed) {
    return guarded([&] {
        require(suite != nullptr && json != nullptr && passed != nullptr, "null argument");
        *json = nullptr;
        const auto report = qdigits::run_suite(qdigits::parse_suite(suite), {max_n, tolerance});
        *json = duplicate(qdigits::to_json(report));
        *passed = report.passed() ? 1 : 0;
    });
}

qd_status qd_sweep(const char *sweep, const qd_sweep_params *params, char **csv) {
    return guarded([&] {
        require(sweep != nullptr && csv != nullptr, "null argument");
        *csv = nullptr;
        qdigits::SweepOptions options;
        if (params != nullptr) {
            const auto flavor =
                params->flavor == nullptr ? qdigits::Flavor::symmetric : qdigits::parse_flavor(params->flavor);
            require(params->base == 2 || params->base == 3, "base must be 2 or 3");
            options.system = qdigits::DigitSystem{params->base, flavor};
            options.d_max = params->d_max;
            options.x = params->x;
        }
        *csv = duplicate(qdigits::run_sweep(qdigits::parse_sweep_kind(sweep), options));
    });
}

void qd_string_free(char *text) { std::free(text); }

const char *qd_last_error(void) { return last_error.c_str(); }

} // extern "C"
