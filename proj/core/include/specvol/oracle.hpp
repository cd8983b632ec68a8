#pragma once

#include <vector>

#include "specvol/graded.hpp"
#include "specvol/polynomial.hpp"

namespace specvol {

inline constexpr int kMaxChords = 10;

/// Coefficients (index = number of crossings) of the crossing generating
/// polynomial over all k-chord diagrams. 0 <= k <= kMaxChords.
std::vector<Integer> chord_moment(int k);

struct ZetaQValue {
    long double value = 0;
    long double error_bound = 0;  // tail bound plus rounding
    long terms = 0;
};

/// sum_{m>=1} q^(mk) / (1 - q^m)^(2k), summed until the certified error is at
/// most rel_tol * value. Throws std::invalid_argument for q outside (0,1), k < 1,
/// or a tolerance below the extended-precision rounding floor.
ZetaQValue zeta_q_numeric(int k, long double q, long double rel_tol);

/// Substitutes zeta_q_numeric values for the generators of a ZetaQ coefficient.
long double specialize_numeric(const GradedCoefficient& c, long double q, long double rel_tol = 1e-15L);

struct SpotCheck {
    Parity parity;
    long double value = 0;
};

/// Evaluates N at integer boundary lengths b with numeric zeta_q values.
SpotCheck numeric_spotcheck(const ParityQuasiPolynomial& N, long double q, const std::vector<long>& b,
                            long double rel_tol = 1e-15L);

}  // namespace specvol
