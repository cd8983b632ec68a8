#include "specvol/mirzakhani.hpp"

#include <stdexcept>

#include "specvol/series.hpp"

namespace specvol {

namespace {

std::vector<GradedCoefficient> exp_coefficients(int count, const Rational& sign)
{
    // exp(sign * sum_m 4^m zeta_q(2m) w^m / m), coefficients of w^0..w^(count-1)
    int high = std::max(count - 1, 0);
    TruncatedLaurentSeries exponent(GeneratorFamily::ZetaQ, 1, high);
    for (int m = 1; m <= high; ++m)
        exponent.at(m) = GradedCoefficient::zeta(m, sign * Rational(Integer(1) << (2 * m)) / m);
    auto e = series_exp(exponent);
    std::vector<GradedCoefficient> out;
    for (int i = 0; i < count; ++i) out.push_back(e[i]);
    return out;
}

Rational inverse_factorial(int n)
{
    return Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace

BetaSequence::BetaSequence(std::string id, GeneratorFamily family, Generator generate)
    : id_(std::move(id)), family_(family), generate_(std::move(generate))
{
}

GradedCoefficient BetaSequence::operator[](int n) const
{
    if (n < 0) throw std::out_of_range("negative beta index");
    std::lock_guard lock(mutex_);
    if (static_cast<int>(values_.size()) <= n) {
        int count = std::max(n + 1, std::min(2 * static_cast<int>(values_.size()), kMaxGenerators + 1));
        values_ = generate_(count);
    }
    return values_[static_cast<std::size_t>(n)];
}

GradedCoefficient beta_q(int n)
{
    return (*q_beta_sequence())[n];
}

GradedCoefficient beta_classical(int i)
{
    if (i < 0) throw std::out_of_range("negative beta index");
    Rational factor = Rational(Integer(1) << (2 * i + 1)) - 4;
    return classical_zeta(static_cast<unsigned>(i)) * factor;
}

std::shared_ptr<const BetaSequence> q_beta_sequence()
{
    static auto seq = std::make_shared<const BetaSequence>(
        "q", GeneratorFamily::ZetaQ, [](int count) { return exp_coefficients(count, 1); });
    return seq;
}

std::shared_ptr<const BetaSequence> classical_beta_sequence()
{
    static auto seq = std::make_shared<const BetaSequence>("classical", GeneratorFamily::PiSquared, [](int count) {
        std::vector<GradedCoefficient> out;
        for (int i = 0; i < count; ++i) out.push_back(beta_classical(i));
        return out;
    });
    return seq;
}

std::vector<GradedCoefficient> beta_transform(const BetaSequence& beta, int a, int b)
{
    Rational scale = Rational(factorial(2 * a + 1) * factorial(2 * b + 1));
    std::vector<GradedCoefficient> out;
    for (int m = 0; m <= a + b + 2; ++m) out.push_back(beta[a + b + 2 - m] * (scale * inverse_factorial(2 * m)));
    return out;
}

std::vector<GradedCoefficient> classical_f_transform(int a, int b)
{
    // F_{2k+1}(t) = (2k+1)! sum_{i=0}^{k+1} (2^{2i+1}-4) zeta(2i) t^{2k+2-2i}/(2k+2-2i)!
    int k = a + b + 1;
    std::vector<GradedCoefficient> f(static_cast<std::size_t>(k + 2), GradedCoefficient(GeneratorFamily::PiSquared));
    for (int i = 0; i <= k + 1; ++i) {
        Rational c = Rational(Integer(1) << (2 * i + 1)) - 4;
        f[static_cast<std::size_t>(k + 1 - i)] = classical_zeta(static_cast<unsigned>(i)) *
                                                 (c * Rational(factorial(2 * k + 1)) * inverse_factorial(2 * k + 2 - 2 * i));
    }
    Rational scale = Rational(factorial(2 * a + 1) * factorial(2 * b + 1)) / Rational(factorial(2 * a + 2 * b + 3));
    for (auto& c : f) c *= scale;
    return f;
}

MirzakhaniEngine::MirzakhaniEngine(std::shared_ptr<const BetaSequence> beta, GradedCoefficient v11)
    : beta_(std::move(beta)), v11_(std::move(v11))
{
}

MirzakhaniEngine MirzakhaniEngine::q_deformed()
{
    return MirzakhaniEngine(q_beta_sequence(), GradedCoefficient::zeta(1, Rational(1, 2)));
}

MirzakhaniEngine MirzakhaniEngine::classical()
{
    return MirzakhaniEngine(classical_beta_sequence(), classical_zeta(1) * Rational(1, 2));
}

BoundaryPolynomial MirzakhaniEngine::volume(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::invalid_argument("unstable (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find({g, n});
        if (it != memo_.end()) return it->second;
    }
    BoundaryPolynomial v = compute(g, n);
    std::lock_guard lock(mutex_);
    memo_.insert_or_assign({g, n}, v);
    return v;
}

BoundaryPolynomial MirzakhaniEngine::compute(int g, int n)
{
    const GeneratorFamily family = beta_->family();
    if (g == 0 && n == 3) {
        BoundaryPolynomial v(3, family, 'L');
        v.add_term({0, 0, 0}, GradedCoefficient(family, 1));
        return v;
    }
    if (g == 1 && n == 1) {
        BoundaryPolynomial v(1, family, 'L');
        v.add_term({2}, GradedCoefficient(family, Rational(1, 48)));
        v.add_term({0}, v11_);
        return v;
    }

    // Right side of d/dL1 (L1 V) in L1..Ln.
    BoundaryPolynomial rhs(n, family, 'L');
    const int rest = n - 1;
    std::map<std::pair<int, int>, std::vector<GradedCoefficient>> transforms;
    auto transform = [&](int a, int b) -> const std::vector<GradedCoefficient>& {
        auto key = std::make_pair(a, b);
        auto it = transforms.find(key);
        if (it == transforms.end()) it = transforms.emplace(key, beta_transform(*beta_, a, b)).first;
        return it->second;
    };
    auto half_exponent = [](int e) {
        if (e % 2) throw std::logic_error("odd power in a volume polynomial");
        return e / 2;
    };
    auto add_lines12 = [&](int a, int b, const Exponents& tail, const GradedCoefficient& c) {
        const auto& t = transform(a, b);
        for (int m = 0; m < static_cast<int>(t.size()); ++m) {
            Exponents e(1, 2 * m);
            e.insert(e.end(), tail.begin(), tail.end());
            rhs.add_term(e, c * t[static_cast<std::size_t>(m)] * Rational(1, 2));
        }
    };

    if (g >= 1) {
        BoundaryPolynomial inner = volume(g - 1, n + 1);
        for (const auto& [e, c] : inner.terms()) {
            Exponents tail(e.begin() + 2, e.end());
            add_lines12(half_exponent(e[0]), half_exponent(e[1]), tail, c);
        }
    }

    for (int g1 = 0; g1 <= g; ++g1) {
        int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            int size_i = __builtin_popcount(mask);
            int n1 = 1 + size_i, n2 = 1 + rest - size_i;
            if (2 * g1 - 2 + n1 < 1 || 2 * g2 - 2 + n2 < 1) continue;
            BoundaryPolynomial v1 = volume(g1, n1), v2 = volume(g2, n2);
            for (const auto& [e1, c1] : v1.terms())
                for (const auto& [e2, c2] : v2.terms()) {
                    Exponents tail(static_cast<std::size_t>(rest));
                    std::size_t i1 = 1, i2 = 1;
                    for (int p = 0; p < rest; ++p) tail[p] = (mask >> p) & 1u ? e1[i1++] : e2[i2++];
                    add_lines12(half_exponent(e1[0]), half_exponent(e2[0]), tail, c1 * c2);
                }
        }
    }

    if (n >= 2) {
        BoundaryPolynomial lower = volume(g, n - 1);
        for (int j = 0; j < rest; ++j) {
            for (const auto& [e, c] : lower.terms()) {
                int a = half_exponent(e[0]);
                Rational scale(factorial(static_cast<unsigned>(2 * a + 1)));
                for (int i = 0; i <= a + 1; ++i)
                    for (int jj = 0; i + jj <= a + 1; ++jj) {
                        Exponents full(static_cast<std::size_t>(n), 0);
                        full[0] = 2 * i;
                        std::size_t src = 1;
                        for (int p = 0; p < rest; ++p) full[p + 1] = p == j ? 2 * jj : e[src++];
                        Rational w = scale * inverse_factorial(2 * i) * inverse_factorial(2 * jj);
                        rhs.add_term(full, c * (*beta_)[a + 1 - i - jj] * w);
                    }
            }
        }
    }

    BoundaryPolynomial v(n, family, 'L');
    for (const auto& [e, c] : rhs.terms()) {
        if (e[0] % 2) throw std::logic_error("odd power of L1 in the recursion right side");
        v.add_term(e, c / Rational(e[0] + 1));
    }
    if (!v.is_symmetric()) throw std::logic_error("Mirzakhani recursion produced a non-symmetric volume");
    return v;
}

std::vector<GradedCoefficient> s_coefficients(int max_m)
{
    if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
    auto y = exp_coefficients(max_m + 1, -1);
    TruncatedLaurentSeries big_y(GeneratorFamily::ZetaQ, 0, max_m);
    for (int k = 0; k <= max_m; ++k) big_y.at(k) = y[static_cast<std::size_t>(k)] * Rational(double_factorial(2 * k + 1));
    auto log_y = series_log(big_y);
    std::vector<GradedCoefficient> out;
    for (int m = 1; m <= max_m; ++m) out.push_back(-log_y[m]);
    return out;
}

LimitCheck vg_limit_check(int g)
{
    using GC = GradedCoefficient;
    auto z = [](std::initializer_list<std::pair<int, unsigned>> factors, Rational c) {
        Monomial m;
        for (auto [k, e] : factors) m.set_exponent(k - 1, e);
        return GC::from_terms(GeneratorFamily::ZetaQ, {{m, c}});
    };
    LimitCheck out;
    if (g == 2) {
        out.stored = z({{1, 3}}, make_rational(191, 90)) + z({{1, 1}, {2, 1}}, make_rational(13, 3)) + z({{3, 1}}, make_rational(35, 18));
        out.expected = GC::pi2(3, make_rational(43, 2160));
    } else if (g == 3) {
        out.stored = z({{1, 6}}, make_rational(10312177, 11340)) + z({{1, 4}, {2, 1}}, make_rational(3829529, 756)) +
                     z({{1, 3}, {3, 1}}, make_rational(452120, 81)) + z({{1, 2}, {2, 2}}, make_rational(1355537, 252)) +
                     z({{1, 2}, {4, 1}}, make_rational(31453, 6)) + z({{1, 1}, {2, 1}, {3, 1}}, make_rational(151348, 27)) +
                     z({{1, 1}, {5, 1}}, make_rational(51128, 15)) + z({{2, 3}}, make_rational(155395, 252)) +
                     z({{2, 1}, {4, 1}}, make_rational(10085, 6)) + z({{3, 2}}, make_rational(54950, 81)) +
                     z({{6, 1}}, make_rational(10010, 9));
        out.expected = GC::pi2(6, make_rational(176557, 1209600));
    } else {
        throw std::invalid_argument("stored V_g(q) only for g = 2, 3");
    }
    out.limit = specialize(out.stored, SpecializeTarget::ClassicalZeta);
    return out;
}

}  // namespace specvol
