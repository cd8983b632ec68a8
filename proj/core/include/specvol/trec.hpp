#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "specvol/curves.hpp"
#include "specvol/differential.hpp"
#include "specvol/series.hpp"

namespace specvol {

/// Differential-valued Laurent series in one local variable: for each basis
/// key of the remaining slots, the series multiplying it.
using SeriesDifferential = std::map<BasisKey, TruncatedLaurentSeries, BasisKeyOrder>;

/// 1/(z - pole_branch)^pole_order expanded about z = alpha, exact to degree high.
TruncatedLaurentSeries basis_factor_series(int pole_branch, int pole_order, int alpha, int high, GeneratorFamily family);

/// Expands slot `slot` of w about `branch`; keys of the result omit that slot.
SeriesDifferential expand_slot(const CorrelationDifferential& w, std::size_t slot, int branch, int max_degree);

/// Sets the two given slots equal to one local variable about `branch` and
/// expands, exact to max_degree. Keys of the result omit both slots.
SeriesDifferential diagonal_restriction(const CorrelationDifferential& w, int branch,
                                        std::pair<std::size_t, std::size_t> slots, int max_degree);

/// Sum of the principal parts at `branch` of kernel * bracket, added to out as
/// terms whose first slot sits at `branch`.
void add_principal_parts(CurveId curve, int branch, const SeriesDifferential& bracket, CorrelationDifferential& out);

/// Closed-form (0,3) and (1,1).
CorrelationDifferential base_case(CurveId curve, int g, int n);

/// (0,3) and (1,1) recomputed through the bracket machinery with the
/// unstable inputs fed through the third-line channel.
CorrelationDifferential base_case_via_recursion(CurveId curve, int g, int n);

bool is_stable(int g, int n);

/// Persistence hook for computed correlators.
class CorrelatorStore {
public:
    virtual ~CorrelatorStore() = default;
    virtual std::optional<CorrelationDifferential> load(CurveId curve, int g, int n) = 0;
    virtual void save(const CorrelationDifferential& w) = 0;
};

class RecursionEngine {
public:
    explicit RecursionEngine(CurveId curve, CorrelatorStore* store = nullptr);

    CurveId curve() const { return curve_; }

    /// Memoized; throws std::invalid_argument for unstable (g,n).
    std::shared_ptr<const CorrelationDifferential> correlator(int g, int n);

    void install(CorrelationDifferential w);
    /// Number of correlators computed by recursion (not loaded or installed).
    int computed_count() const { return computed_; }

private:
    std::shared_ptr<const CorrelationDifferential> lookup(int g, int n) const;
    CorrelationDifferential compute(int g, int n);
    SeriesDifferential bracket(int g, int n, int branch);

    CurveId curve_;
    CorrelatorStore* store_;
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const CorrelationDifferential>> memo_;
    int computed_ = 0;
};

}  // namespace specvol
