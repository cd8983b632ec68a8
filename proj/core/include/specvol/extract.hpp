#pragma once

#include <stdexcept>

#include "specvol/differential.hpp"
#include "specvol/polynomial.hpp"

namespace specvol {

class ExtractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Okuyama correlator -> parity quasi-polynomial N(b_1, ..., b_n). Throws
/// ExtractError if an odd power survives in any class.
ParityQuasiPolynomial discrete_volume(const CorrelationDifferential& w);

/// One-branch correlator -> polynomial V(L_1, ..., L_n) with coefficient of
/// prod L_i^(k_i) equal to C_k / prod (k_i + 1)!. Throws on odd k.
BoundaryPolynomial inverse_laplace_volume(const CorrelationDifferential& w);

/// Degree 6g-6+2n part of N. Classes whose parities sum to an odd number
/// must vanish; the remaining classes must agree. Throws ExtractError otherwise.
BoundaryPolynomial top_degree_volume(const ParityQuasiPolynomial& N, int g, int n);

/// top_degree_volume followed by zeta_q(2k) -> zeta(2k), in L variables.
BoundaryPolynomial wp_limit(const ParityQuasiPolynomial& N, int g, int n);

}  // namespace specvol
