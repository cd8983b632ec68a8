#include "specvol/differential.hpp"

#include <algorithm>

namespace specvol {

namespace {

int total_order(const BasisKey& key)
{
    int s = 0;
    for (const auto& slot : key) s += slot.order;
    return s;
}

}  // namespace

bool BasisKeyOrder::operator()(const BasisKey& a, const BasisKey& b) const
{
    int ta = total_order(a), tb = total_order(b);
    if (ta != tb) return ta > tb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].branch != b[i].branch) return a[i].branch > b[i].branch;
        if (a[i].order != b[i].order) return a[i].order > b[i].order;
    }
    return false;
}

void CorrelationDifferential::add(const BasisKey& key, const GradedCoefficient& c)
{
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        GradedCoefficient stored(family());
        stored += c;
        terms.emplace(key, std::move(stored));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

GradedCoefficient CorrelationDifferential::coefficient(const BasisKey& key) const
{
    auto it = terms.find(key);
    return it == terms.end() ? GradedCoefficient(family()) : it->second;
}

int CorrelationDifferential::max_pole_order() const
{
    int best = 0;
    for (const auto& [key, c] : terms)
        for (const auto& slot : key) best = std::max(best, slot.order + 2);
    return best;
}

bool operator==(const CorrelationDifferential& a, const CorrelationDifferential& b)
{
    return a.curve == b.curve && a.g == b.g && a.n == b.n && a.terms == b.terms;
}

CorrelationDifferential scaled(const CorrelationDifferential& w, const Rational& s)
{
    CorrelationDifferential out{w.curve, w.g, w.n, {}};
    if (sgn(s) == 0) return out;
    for (const auto& [key, c] : w.terms) out.terms.emplace(key, c * s);
    return out;
}

CorrelationDifferential specialize(const CorrelationDifferential& w, SpecializeTarget target, CurveId as_curve)
{
    CorrelationDifferential out{as_curve, w.g, w.n, {}};
    for (const auto& [key, c] : w.terms) out.add(key, specialize(c, target));
    return out;
}

bool ValidationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

const InvariantCheck* ValidationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::summary() const
{
    std::string out;
    for (const auto& c : checks) {
        out += c.name + ": " + (c.passed ? "pass" : "FAIL");
        if (!c.passed && !c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

ValidationReport validate(const CorrelationDifferential& w)
{
    ValidationReport report;
    const SpectralCurve& curve = curve_descriptor(w.curve);
    const int top = 6 * w.g - 6 + 2 * w.n;
    const int pole_bound = 6 * w.g - 4 + 2 * w.n;

    auto check = [](const char* name) { return InvariantCheck{name, true, {}}; };
    InvariantCheck labels = check("branch-labels"), symmetry = check("symmetry"), pole = check("pole-bound"),
                   residue = check("residue-free"), degree = check("grade-bound"),
                   reflection = check("branch-reflection"), even = check("even-orders"), strict = check("mixed-strict");

    auto fail = [&](InvariantCheck& check, const BasisKey& key) {
        if (!check.passed) return;
        check.passed = false;
        check.detail = render_key(key);
    };

    for (const auto& [key, c] : w.terms) {
        if (static_cast<int>(key.size()) != w.n) fail(labels, key);
        bool mixed = false;
        for (const auto& slot : key) {
            const auto& bp = curve.branch_points;
            if (std::find(bp.begin(), bp.end(), slot.branch) == bp.end()) fail(labels, key);
            if (slot.order < 0) fail(residue, key);
            if (slot.order + 2 > pole_bound) fail(pole, key);
            if (one_branch(w.curve) && slot.order % 2) fail(even, key);
            if (slot.branch != key.front().branch) mixed = true;
        }
        int weight = grade(c) + total_order(key);
        if (weight > top) fail(degree, key);
        if (mixed && weight >= top) fail(strict, key);

        for (std::size_t i = 0; i + 1 < key.size(); ++i) {
            BasisKey swapped = key;
            std::swap(swapped[i], swapped[i + 1]);
            if (!(w.coefficient(swapped) == c)) fail(symmetry, key);
        }

        if (w.curve == CurveId::Okuyama) {
            BasisKey mirrored = key;
            int exponent = 0;
            for (auto& slot : mirrored) {
                slot.branch = static_cast<std::int8_t>(-slot.branch);
                exponent += slot.order - 1;
            }
            GradedCoefficient expected = w.coefficient(mirrored);
            if (exponent % 2) expected = -expected;
            if (!(expected == c)) fail(reflection, key);
        }
    }

    report.checks = {labels, symmetry, pole, residue, degree, reflection, even, strict};
    return report;
}

std::string render_key(const BasisKey& key)
{
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += " * ";
        std::string z = "z" + std::to_string(i + 1);
        std::string base = z;
        if (key[i].branch == 1) base += "-1";
        else if (key[i].branch == -1) base += "+1";
        out += "d" + z + "/(" + base + ")^" + std::to_string(key[i].order + 2);
    }
    return out;
}

std::string render(const CorrelationDifferential& w)
{
    if (w.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : w.terms) {
        std::string coeff;
        bool negative = false;
        if (c.terms().size() == 1) {
            const auto& [mono, r] = c.terms().front();
            negative = sgn(r) < 0;
            coeff = render(negative ? -c : c);
        } else {
            coeff = "(" + render(c) + ")";
        }
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        out += (coeff == "1" ? "" : coeff + " * ") + render_key(key);
    }
    return out;
}

}  // namespace specvol
