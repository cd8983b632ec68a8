#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specvol/curves.hpp"
#include "specvol/graded.hpp"

namespace specvol {

/// One factor dz_i / (z_i - branch)^(order + 2).
struct Slot {
    std::int8_t branch = 0;
    std::int8_t order = 0;

    auto operator<=>(const Slot&) const = default;
};

using BasisKey = std::vector<Slot>;

/// Higher total order first, then by slot sequence with +1 before -1 and
/// larger orders first.
struct BasisKeyOrder {
    bool operator()(const BasisKey& a, const BasisKey& b) const;
};

/// Sum over basis keys of C * prod_i dz_i/(z_i - a_i)^(k_i + 2).
struct CorrelationDifferential {
    using TermMap = std::map<BasisKey, GradedCoefficient, BasisKeyOrder>;

    CurveId curve = CurveId::Airy;
    int g = 0;
    int n = 0;
    TermMap terms;

    GeneratorFamily family() const { return curve_descriptor(curve).family; }
    void add(const BasisKey& key, const GradedCoefficient& c);
    GradedCoefficient coefficient(const BasisKey& key) const;
    /// Largest pole order k + 2 over all slots (0 when empty).
    int max_pole_order() const;

    friend bool operator==(const CorrelationDifferential& a, const CorrelationDifferential& b);
};

/// Every term multiplied by the same rational.
CorrelationDifferential scaled(const CorrelationDifferential& w, const Rational& s);
CorrelationDifferential specialize(const CorrelationDifferential& w, SpecializeTarget target, CurveId as_curve);

struct InvariantCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // first offending term when failed
};

struct ValidationReport {
    std::vector<InvariantCheck> checks;

    bool ok() const;
    const InvariantCheck* find(const std::string& name) const;
    std::string summary() const;
};

/// Checks symmetry, pole bound, residue-freeness, grade bound, branch
/// reflection (Okuyama), even orders (one-branch curves) and strictness of the
/// grade bound for mixed branch labels.
ValidationReport validate(const CorrelationDifferential& w);

/// "(1/4*z2 - 1/32) * dz1/(z1-1)^2 + ..." one term per line joined by " + ".
std::string render(const CorrelationDifferential& w);
std::string render_key(const BasisKey& key);

}  // namespace specvol
