#include "specvol/trec.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace specvol {

namespace {

BasisKey without(const BasisKey& key, std::size_t a, std::size_t b = static_cast<std::size_t>(-1))
{
    BasisKey out;
    out.reserve(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
        if (i != a && i != b) out.push_back(key[i]);
    return out;
}

void accumulate(SeriesDifferential& acc, const BasisKey& key, const TruncatedLaurentSeries& s)
{
    if (s.is_zero()) return;
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, s);
    else it->second += s;
}

// acc[key] += c * s
void accumulate_scaled(SeriesDifferential& acc, const BasisKey& key, const GradedCoefficient& c,
                       const TruncatedLaurentSeries& s, GeneratorFamily family)
{
    if (c.is_zero() || s.is_zero()) return;
    auto it = acc.find(key);
    if (it == acc.end()) it = acc.emplace(key, TruncatedLaurentSeries(family, s.valuation(), s.high())).first;
    TruncatedLaurentSeries& target = it->second;
    if (target.high() > s.high()) target = target.truncated(s.high());
    for (int d = s.valuation(); d <= target.high(); ++d) {
        const auto& sd = s[d];
        if (!sd.is_zero()) target.at(d).add_product(c, sd);
    }
}

int pole_at(const BasisKey& key, std::size_t slot, int branch)
{
    return key[slot].branch == branch ? key[slot].order + 2 : 0;
}

int max_pole_at(const CorrelationDifferential& w, std::size_t slot, int branch)
{
    int best = 0;
    for (const auto& [key, c] : w.terms) best = std::max(best, pole_at(key, slot, branch));
    return best;
}

BasisKey interleave(const BasisKey& first, const BasisKey& second, unsigned mask, std::size_t total)
{
    BasisKey out(total);
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < total; ++i) out[i] = (mask >> i) & 1u ? first[a++] : second[b++];
    return out;
}

}  // namespace

bool is_stable(int g, int n)
{
    return g >= 0 && n >= 1 && 2 * g - 2 + n >= 1;
}

TruncatedLaurentSeries basis_factor_series(int pole_branch, int pole_order, int alpha, int high, GeneratorFamily family)
{
    if (pole_branch == alpha) {
        return TruncatedLaurentSeries::monomial(GradedCoefficient(family, 1), -pole_order, high);
    }
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::vector<Rational>> memo;
    std::vector<Rational> coeffs;
    {
        std::lock_guard lock(mutex);
        auto& cached = memo[{pole_branch, pole_order, alpha}];
        Rational c(alpha - pole_branch);
        for (int l = static_cast<int>(cached.size()); l <= high; ++l) {
            Rational v = Rational(binomial(pole_order + l - 1, l)) / pow(c, pole_order + l);
            cached.push_back(l % 2 ? -v : v);
        }
        if (high >= 0) coeffs.assign(cached.begin(), cached.begin() + high + 1);
    }
    return TruncatedLaurentSeries::from_rationals(family, 0, coeffs, std::max(high, -1));
}

SeriesDifferential expand_slot(const CorrelationDifferential& w, std::size_t slot, int branch, int max_degree)
{
    SeriesDifferential out;
    GeneratorFamily family = w.family();
    for (const auto& [key, c] : w.terms) {
        auto f = basis_factor_series(key[slot].branch, key[slot].order + 2, branch, max_degree, family);
        accumulate_scaled(out, without(key, slot), c, f, family);
    }
    return out;
}

SeriesDifferential diagonal_restriction(const CorrelationDifferential& w, int branch,
                                        std::pair<std::size_t, std::size_t> slots, int max_degree)
{
    SeriesDifferential out;
    GeneratorFamily family = w.family();
    std::map<std::tuple<Slot, Slot>, TruncatedLaurentSeries> products;
    for (const auto& [key, c] : w.terms) {
        Slot s0 = key[slots.first], s1 = key[slots.second];
        auto it = products.find({s0, s1});
        if (it == products.end()) {
            int p0 = pole_at(key, slots.first, branch), p1 = pole_at(key, slots.second, branch);
            auto f0 = basis_factor_series(s0.branch, s0.order + 2, branch, max_degree + p1, family);
            auto f1 = basis_factor_series(s1.branch, s1.order + 2, branch, max_degree + p0, family);
            auto prod = series_mul(f0, f1, max_degree);
            if (prod.high() < max_degree) throw std::logic_error("window underrun in diagonal restriction");
            it = products.emplace(std::make_tuple(s0, s1), std::move(prod)).first;
        }
        accumulate_scaled(out, without(key, slots.first, slots.second), c, it->second, family);
    }
    return out;
}

void add_principal_parts(CurveId curve, int branch, const SeriesDifferential& bracket, CorrelationDifferential& out)
{
    int pole = 0;
    for (const auto& [key, s] : bracket) {
        if (s.high() < 1) throw std::logic_error("bracket window does not reach degree 1");
        if (!s.is_zero()) pole = std::max(pole, -s.valuation());
    }
    TruncatedLaurentSeries kernel = kernel_series(curve, branch, std::max(pole - 1, -2));
    for (const auto& [key, s] : bracket) {
        if (s.is_zero()) continue;
        auto prod = series_mul(kernel, s, -1);
        if (prod.high() < -1) throw std::logic_error("window underrun in principal part");
        if (!prod[-1].is_zero())
            throw std::logic_error("nonzero residue at branch " + std::to_string(branch) + ": " + render(prod[-1]));
        for (int d = prod.low(); d <= -2; ++d) {
            if (prod[d].is_zero()) continue;
            BasisKey full;
            full.reserve(key.size() + 1);
            full.push_back(Slot{static_cast<std::int8_t>(branch), static_cast<std::int8_t>(-d - 2)});
            full.insert(full.end(), key.begin(), key.end());
            out.add(full, prod[d]);
        }
    }
}

CorrelationDifferential base_case(CurveId curve, int g, int n)
{
    CorrelationDifferential w{curve, g, n, {}};
    GeneratorFamily family = curve_descriptor(curve).family;
    auto k = [](int branch, int order) { return Slot{static_cast<std::int8_t>(branch), static_cast<std::int8_t>(order)}; };
    if (g == 0 && n == 3) {
        if (curve == CurveId::Okuyama) {
            w.add({k(1, 0), k(1, 0), k(1, 0)}, GradedCoefficient(family, Rational(1, 2)));
            w.add({k(-1, 0), k(-1, 0), k(-1, 0)}, GradedCoefficient(family, Rational(-1, 2)));
        } else {
            w.add({k(0, 0), k(0, 0), k(0, 0)}, GradedCoefficient(family, 1));
        }
        return w;
    }
    if (g == 1 && n == 1) {
        switch (curve) {
        case CurveId::Okuyama: {
            GradedCoefficient c0 = GradedCoefficient::zeta(1, Rational(1, 4)) - GradedCoefficient(family, Rational(1, 32));
            w.add({k(1, 2)}, GradedCoefficient(family, Rational(1, 16)));
            w.add({k(1, 1)}, GradedCoefficient(family, Rational(1, 16)));
            w.add({k(1, 0)}, c0);
            w.add({k(-1, 2)}, GradedCoefficient(family, Rational(-1, 16)));
            w.add({k(-1, 1)}, GradedCoefficient(family, Rational(1, 16)));
            w.add({k(-1, 0)}, -c0);
            break;
        }
        case CurveId::TopQ:
            w.add({k(0, 2)}, GradedCoefficient(family, Rational(1, 8)));
            w.add({k(0, 0)}, GradedCoefficient::zeta(1, Rational(1, 2)));
            break;
        case CurveId::WPClassical:
            w.add({k(0, 2)}, GradedCoefficient(family, Rational(1, 8)));
            w.add({k(0, 0)}, classical_zeta(1) * Rational(1, 2));
            break;
        case CurveId::Airy:
            w.add({k(0, 2)}, GradedCoefficient(family, Rational(1, 8)));
            break;
        }
        return w;
    }
    throw std::invalid_argument("no closed form for (" + std::to_string(g) + "," + std::to_string(n) + ")");
}

CorrelationDifferential base_case_via_recursion(CurveId curve, int g, int n)
{
    CorrelationDifferential w{curve, g, n, {}};
    GeneratorFamily family = curve_descriptor(curve).family;
    for (int branch : curve_descriptor(curve).branch_points) {
        SeriesDifferential bracket;
        if (g == 0 && n == 3) {
            auto direct = omega02_bracket_series(curve, branch, 1, Omega02Part::Direct);
            auto reflected = omega02_bracket_series(curve, branch, 1, Omega02Part::Reflected);
            auto add_pair = [&](const auto& x, const auto& y, bool swap) {
                for (int m = 0; m <= 1; ++m)
                    for (int m2 = 0; m + m2 <= 1; ++m2)
                        for (const auto& a : x[m])
                            for (const auto& b : y[m2]) {
                                Slot sa{static_cast<std::int8_t>(branch), static_cast<std::int8_t>(a.order)};
                                Slot sb{static_cast<std::int8_t>(branch), static_cast<std::int8_t>(b.order)};
                                BasisKey key = swap ? BasisKey{sb, sa} : BasisKey{sa, sb};
                                auto s = TruncatedLaurentSeries::monomial(GradedCoefficient(family, a.coeff * b.coeff), m + m2, 1);
                                accumulate(bracket, key, s);
                            }
            };
            add_pair(direct, reflected, false);
            add_pair(direct, reflected, true);
        } else if (g == 1 && n == 1) {
            bracket.emplace(BasisKey{}, omega02_diagonal_series(curve, branch, 1));
        } else {
            throw std::invalid_argument("not a base case");
        }
        add_principal_parts(curve, branch, bracket, w);
    }
    return w;
}

RecursionEngine::RecursionEngine(CurveId curve, CorrelatorStore* store) : curve_(curve), store_(store)
{
    install(base_case(curve, 0, 3));
    install(base_case(curve, 1, 1));
}

void RecursionEngine::install(CorrelationDifferential w)
{
    if (w.curve != curve_) throw std::invalid_argument("installing a correlator of another curve");
    auto key = std::make_pair(w.g, w.n);
    auto ptr = std::make_shared<const CorrelationDifferential>(std::move(w));
    std::unique_lock lock(mutex_);
    memo_[key] = std::move(ptr);
}

std::shared_ptr<const CorrelationDifferential> RecursionEngine::lookup(int g, int n) const
{
    std::shared_lock lock(mutex_);
    auto it = memo_.find({g, n});
    return it == memo_.end() ? nullptr : it->second;
}

std::shared_ptr<const CorrelationDifferential> RecursionEngine::correlator(int g, int n)
{
    if (!is_stable(g, n))
        throw std::invalid_argument("unstable (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
    if (auto hit = lookup(g, n)) return hit;
    if (store_) {
        if (auto loaded = store_->load(curve_, g, n)) {
            install(std::move(*loaded));
            return lookup(g, n);
        }
    }
    CorrelationDifferential w = compute(g, n);
    ++computed_;
    if (store_) store_->save(w);
    install(std::move(w));
    return lookup(g, n);
}

SeriesDifferential RecursionEngine::bracket(int g, int n, int branch)
{
    SeriesDifferential acc;
    const std::size_t rest = static_cast<std::size_t>(n - 1);

    if (g >= 1) {
        auto inner = correlator(g - 1, n + 1);
        for (auto& [key, s] : diagonal_restriction(*inner, branch, {0, 1}, 1)) accumulate(acc, key, s);
    }

    std::map<std::tuple<int, int, int>, SeriesDifferential> expansions;
    auto expanded = [&](int gg, int nn, int high) -> const SeriesDifferential& {
        auto key = std::make_tuple(gg, nn, high);
        auto it = expansions.find(key);
        if (it == expansions.end()) it = expansions.emplace(key, expand_slot(*correlator(gg, nn), 0, branch, high)).first;
        return it->second;
    };

    for (int g1 = 0; g1 <= g; ++g1) {
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            int size_i = __builtin_popcount(mask);
            int g2 = g - g1;
            int n1 = 1 + size_i, n2 = 1 + static_cast<int>(rest) - size_i;
            if (2 * g1 - 2 + n1 < 1 || 2 * g2 - 2 + n2 < 1) continue;
            auto w1 = correlator(g1, n1);
            auto w2 = correlator(g2, n2);
            const auto& e1 = expanded(g1, n1, 1 + max_pole_at(*w2, 0, branch));
            const auto& e2 = expanded(g2, n2, 1 + max_pole_at(*w1, 0, branch));
            for (const auto& [k1, s1] : e1)
                for (const auto& [k2, s2] : e2) {
                    auto prod = series_mul(s1, s2, 1);
                    if (prod.high() < 1) throw std::logic_error("window underrun in stable product");
                    accumulate(acc, interleave(k1, k2, mask, rest), prod);
                }
        }
    }

    if (n >= 2) {
        auto lower = correlator(g, n - 1);
        int high = 1 + max_pole_at(*lower, 0, branch);
        auto w02 = omega02_bracket_series(curve_, branch, high);
        const auto& e = expanded(g, n - 1, 1);
        GeneratorFamily family = curve_descriptor(curve_).family;
        for (std::size_t j = 0; j < rest; ++j) {
            for (const auto& [key, f] : e) {
                if (f.is_zero()) continue;
                int v = f.valuation();
                for (int m = 0; m <= 1 - v; ++m) {
                    auto shifted = f.shifted(m).truncated(1);
                    for (const auto& term : w02[m]) {
                        BasisKey full = key;
                        full.insert(full.begin() + static_cast<std::ptrdiff_t>(j),
                                    Slot{static_cast<std::int8_t>(branch), static_cast<std::int8_t>(term.order)});
                        accumulate_scaled(acc, full, GradedCoefficient(family, term.coeff), shifted, family);
                    }
                }
            }
        }
    }
    return acc;
}

CorrelationDifferential RecursionEngine::compute(int g, int n)
{
    CorrelationDifferential w{curve_, g, n, {}};
    for (int branch : curve_descriptor(curve_).branch_points) add_principal_parts(curve_, branch, bracket(g, n, branch), w);
    return w;
}

}  // namespace specvol
