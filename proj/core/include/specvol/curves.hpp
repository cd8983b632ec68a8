#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specvol/graded.hpp"
#include "specvol/series.hpp"

namespace specvol {

enum class CurveId { Okuyama, TopQ, WPClassical, Airy };

struct SpectralCurve {
    CurveId id;
    std::string name;
    std::vector<int> branch_points;  // +1/-1 for Okuyama, 0 otherwise
    GeneratorFamily family;
    bool odd_symmetry;
};

const SpectralCurve& curve_descriptor(CurveId id);
std::string curve_name(CurveId id);
/// Accepts "okuyama", "topq", "wp" / "wpclassical", "airy" (case-insensitive).
CurveId parse_curve(std::string_view name);
bool one_branch(CurveId id);

enum class Side { Plus, Minus };

/// Coefficient of t^(m-2k) in (1/k)(2 - t + t^2 - ...)^(2k) (Plus) or in
/// (1/k)(2 + t + t^2 + ...)^(2k) (Minus).
Rational a_coefficient(int m, int k, Side side);

/// Laurent expansion of 1/(2 y x') at the branch point in the local variable
/// z - branch, exact on [-2, max_degree]. Memoized.
TruncatedLaurentSeries kernel_series(CurveId curve, int branch, int max_degree);

/// One term c / (z_j - branch)^(order + 2) of a bracket coefficient.
struct SlotTerm {
    int order;
    Rational coeff;
};

enum class Omega02Part { Both, Direct, Reflected };

/// Expansion of the third-line factor (direct part 1/(z1-zj)^2 plus its
/// reflection) about z1 = branch. Entry m is the coefficient of (z1-branch)^m,
/// written in the basis 1/(zj - branch)^(k+2).
std::vector<std::vector<SlotTerm>> omega02_bracket_series(CurveId curve, int branch, int max_degree,
                                                          Omega02Part part = Omega02Part::Both);

/// The regular diagonal factor that seeds (1,1): 1/(z^2-1)^2 for Okuyama,
/// 1/(4z^2) for the one-branch curves.
TruncatedLaurentSeries omega02_diagonal_series(CurveId curve, int branch, int max_degree);

}  // namespace specvol
