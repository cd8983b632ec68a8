#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specvol/differential.hpp"
#include "specvol/polynomial.hpp"

namespace specvol {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(std::string_view name);

/// {"curve","g","n","terms":[{"branches","orders","coeff":{"gens","num","den"}}]}
/// with one entry per coefficient monomial, in canonical order.
std::string to_json(const CorrelationDifferential& w);
CorrelationDifferential differential_from_json(std::string_view text);

std::string to_csv(const CorrelationDifferential& w);

std::string to_json(const BoundaryPolynomial& p);
std::string to_csv(const BoundaryPolynomial& p);
std::string to_json(const ParityQuasiPolynomial& p);
std::string to_csv(const ParityQuasiPolynomial& p);
/// Parity table, one "parity: polynomial" line per class.
std::string render(const ParityQuasiPolynomial& p);

std::string format_differential(const CorrelationDifferential& w, OutputFormat format);
std::string format_polynomial(const BoundaryPolynomial& p, OutputFormat format);
std::string format_quasi(const ParityQuasiPolynomial& p, OutputFormat format);
/// Labelled list of coefficients ("s1", "s2", ...).
std::string format_coefficients(const std::vector<std::pair<std::string, GradedCoefficient>>& items,
                                OutputFormat format);

}  // namespace specvol
