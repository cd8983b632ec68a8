#include "specvol/extract.hpp"

#include <map>

namespace specvol {

namespace {

// (b+1)(b+2)...(b+k)/(k+1)!, index = power of b.
std::vector<Rational> rising_over_factorial(int k)
{
    std::vector<Rational> p{Rational(1)};
    for (int j = 1; j <= k; ++j) {
        std::vector<Rational> next(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i] * j;
            next[i + 1] += p[i];
        }
        p = std::move(next);
    }
    Rational f(factorial(static_cast<unsigned>(k + 1)));
    for (auto& c : p) c /= f;
    return p;
}

// Sign of the z^(b-1) coefficient of 1/(z - a)^(k+2) for b of the given parity.
int expansion_sign(int branch, int order, int parity)
{
    if (branch == 1) return order % 2 ? -1 : 1;
    return parity ? 1 : -1;
}

}  // namespace

ParityQuasiPolynomial discrete_volume(const CorrelationDifferential& w)
{
    if (w.curve != CurveId::Okuyama) throw ExtractError("discrete volumes need the Okuyama curve");
    const int n = w.n;
    GeneratorFamily family = w.family();
    ParityQuasiPolynomial out(n, family, 'b');

    // Group by order vector: the branch labels only change signs per class.
    std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, const GradedCoefficient*>>> by_orders;
    for (const auto& [key, c] : w.terms) {
        std::vector<int> orders, branches;
        for (const auto& slot : key) {
            orders.push_back(slot.order);
            branches.push_back(slot.branch);
        }
        by_orders[orders].emplace_back(branches, &c);
    }

    std::map<int, std::vector<Rational>> rising;
    for (const auto& [orders, entries] : by_orders) {
        // Expand prod_i R_{k_i}(b_i) once.
        std::vector<std::pair<Exponents, Rational>> product{{Exponents(n, 0), Rational(1)}};
        for (int i = 0; i < n; ++i) {
            auto it = rising.find(orders[i]);
            if (it == rising.end()) it = rising.emplace(orders[i], rising_over_factorial(orders[i])).first;
            std::vector<std::pair<Exponents, Rational>> next;
            for (const auto& [e, r] : product)
                for (std::size_t d = 0; d < it->second.size(); ++d) {
                    if (sgn(it->second[d]) == 0) continue;
                    Exponents e2 = e;
                    e2[i] = static_cast<int>(d);
                    next.emplace_back(std::move(e2), r * it->second[d]);
                }
            product = std::move(next);
        }

        for (auto& [parity, poly] : out.classes()) {
            (void)poly;
            GradedCoefficient coeff(family);
            for (const auto& [branches, c] : entries) {
                int sign = 1;
                for (int i = 0; i < n; ++i) sign *= expansion_sign(branches[i], orders[i], parity[i]);
                if (sign > 0) coeff += *c;
                else coeff -= *c;
            }
            if (coeff.is_zero()) continue;
            BoundaryPolynomial& target = out.at(parity);
            for (const auto& [e, r] : product) target.add_term(e, coeff * r);
        }
    }

    for (const auto& [parity, poly] : out.classes())
        if (!poly.only_even_exponents())
            throw ExtractError("odd power survives in parity class " + render_parity(parity) + ": " + render(poly));
    return out;
}

BoundaryPolynomial inverse_laplace_volume(const CorrelationDifferential& w)
{
    if (!one_branch(w.curve)) throw ExtractError("inverse Laplace volumes need a one-branch curve");
    BoundaryPolynomial out(w.n, w.family(), 'L');
    for (const auto& [key, c] : w.terms) {
        Exponents e;
        Rational denom = 1;
        for (const auto& slot : key) {
            if (slot.order % 2) throw ExtractError("odd pole order offset " + std::to_string(slot.order));
            e.push_back(slot.order);
            denom *= Rational(factorial(static_cast<unsigned>(slot.order + 1)));
        }
        out.add_term(e, c / denom);
    }
    return out;
}

BoundaryPolynomial top_degree_volume(const ParityQuasiPolynomial& N, int g, int n)
{
    if (N.variables() != n) throw ExtractError("variable count does not match n");
    const int d = 6 * g - 6 + 2 * n;
    const BoundaryPolynomial* reference = nullptr;
    BoundaryPolynomial reference_top(n, GeneratorFamily::ZetaQ, 'b');
    for (const auto& [parity, poly] : N.classes()) {
        int parity_sum = 0;
        for (auto p : parity) parity_sum += p;
        if (parity_sum % 2) {
            if (!poly.is_zero())
                throw ExtractError("class " + render_parity(parity) + " has odd parity sum but is nonzero");
            continue;
        }
        BoundaryPolynomial top = top_part(poly, d);
        if (!reference) {
            reference = &poly;
            reference_top = top;
        } else if (!(top == reference_top)) {
            throw ExtractError("top degree differs in class " + render_parity(parity) + ": " +
                               first_difference(top, reference_top));
        }
    }
    return reference_top;
}

BoundaryPolynomial wp_limit(const ParityQuasiPolynomial& N, int g, int n)
{
    return specialize(top_degree_volume(N, g, n), SpecializeTarget::ClassicalZeta).with_symbol('L');
}

}  // namespace specvol
