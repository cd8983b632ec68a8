#include "specvol/graded.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace specvol {

Monomial Monomial::generator(int k, unsigned power)
{
    if (k < 1 || k > kMaxGenerators) throw std::out_of_range("generator index " + std::to_string(k));
    Monomial m;
    m.set_exponent(k - 1, power);
    return m;
}

void Monomial::set_exponent(int index, unsigned value)
{
    if (value > 255) throw std::overflow_error("generator exponent exceeds 255");
    exps_[index] = static_cast<std::uint8_t>(value);
}

int Monomial::grade() const
{
    int g = 0;
    for (int i = 0; i < kMaxGenerators; ++i) g += 2 * (i + 1) * exps_[i];
    return g;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

int Monomial::highest_index() const
{
    for (int i = kMaxGenerators - 1; i >= 0; --i)
        if (exps_[i]) return i;
    return -1;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (int i = 0; i < kMaxGenerators; ++i) r.set_exponent(i, unsigned(exps_[i]) + other.exps_[i]);
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga > gb;
    for (int i = kMaxGenerators - 1; i >= 0; --i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
    return false;
}

namespace {

void normalize(std::vector<GradedCoefficient::Term>& terms)
{
    MonomialOrder less;
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = terms[i].second;
        while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
        if (sgn(sum) != 0) {
            terms[out].first = terms[i].first;
            terms[out].second = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

GradedCoefficient::GradedCoefficient(GeneratorFamily family, const Rational& constant) : family_(family)
{
    if (sgn(constant) != 0) terms_.emplace_back(Monomial(), constant);
}

GradedCoefficient GradedCoefficient::zeta(int k, const Rational& coeff, unsigned power)
{
    GradedCoefficient c(GeneratorFamily::ZetaQ);
    if (sgn(coeff) != 0) c.terms_.emplace_back(Monomial::generator(k, power), coeff);
    return c;
}

GradedCoefficient GradedCoefficient::pi2(unsigned power, const Rational& coeff)
{
    GradedCoefficient c(GeneratorFamily::PiSquared);
    if (sgn(coeff) != 0) c.terms_.emplace_back(Monomial::generator(1, power), coeff);
    return c;
}

GradedCoefficient GradedCoefficient::from_terms(GeneratorFamily family, std::vector<Term> terms)
{
    GradedCoefficient c(family);
    normalize(terms);
    if (family == GeneratorFamily::PiSquared)
        for (const auto& [m, r] : terms)
            if (m.highest_index() > 0) throw std::invalid_argument("PiSquared family has a single generator");
    c.terms_ = std::move(terms);
    return c;
}

bool GradedCoefficient::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational GradedCoefficient::constant_term() const
{
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return 0;
}

Rational GradedCoefficient::coefficient(const Monomial& m) const
{
    for (const auto& [mono, r] : terms_)
        if (mono == m) return r;
    return 0;
}

GradedCoefficient GradedCoefficient::homogeneous_part(int g) const
{
    GradedCoefficient out(family_);
    for (const auto& t : terms_)
        if (t.first.grade() == g) out.terms_.push_back(t);
    return out;
}

bool GradedCoefficient::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.first.grade() != terms_.front().first.grade()) return false;
    return true;
}

void GradedCoefficient::adopt_family(const GradedCoefficient& other)
{
    if (family_ == other.family_) return;
    if (other.is_constant()) return;
    if (is_constant()) {
        family_ = other.family_;
        return;
    }
    throw std::invalid_argument("mixing ZetaQ and PiSquared coefficients");
}

void GradedCoefficient::merge(std::vector<Term>&& other, bool negate)
{
    MonomialOrder less;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.size());
    auto a = terms_.begin();
    auto b = other.begin();
    while (a != terms_.end() || b != other.end()) {
        if (b == other.end() || (a != terms_.end() && less(a->first, b->first))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || less(b->first, a->first)) {
            if (negate) b->second = -b->second;
            out.push_back(std::move(*b++));
        } else {
            if (negate) a->second -= b->second;
            else a->second += b->second;
            if (sgn(a->second) != 0) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

GradedCoefficient& GradedCoefficient::operator+=(const GradedCoefficient& other)
{
    adopt_family(other);
    merge(std::vector<Term>(other.terms_), false);
    return *this;
}

GradedCoefficient& GradedCoefficient::operator-=(const GradedCoefficient& other)
{
    adopt_family(other);
    merge(std::vector<Term>(other.terms_), true);
    return *this;
}

GradedCoefficient operator*(const GradedCoefficient& a, const GradedCoefficient& b)
{
    GradedCoefficient out(a.family_);
    out.adopt_family(b);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<GradedCoefficient::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ra] : a.terms_)
        for (const auto& [mb, rb] : b.terms_) terms.emplace_back(ma * mb, ra * rb);
    normalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

GradedCoefficient& GradedCoefficient::operator*=(const GradedCoefficient& other)
{
    *this = *this * other;
    return *this;
}

GradedCoefficient& GradedCoefficient::operator*=(const Rational& scalar)
{
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= scalar;
    return *this;
}

GradedCoefficient& GradedCoefficient::operator/=(const Rational& scalar)
{
    if (sgn(scalar) == 0) throw std::domain_error("division by zero");
    for (auto& t : terms_) t.second /= scalar;
    return *this;
}

void GradedCoefficient::add_product(const GradedCoefficient& a, const Rational& b)
{
    if (sgn(b) == 0 || a.is_zero()) return;
    adopt_family(a);
    std::vector<Term> scaled(a.terms_);
    for (auto& t : scaled) t.second *= b;
    merge(std::move(scaled), false);
}

void GradedCoefficient::add_product(const GradedCoefficient& a, const GradedCoefficient& b)
{
    if (a.is_zero() || b.is_zero()) return;
    if (b.is_constant()) {
        add_product(a, b.terms_[0].second);
        return;
    }
    if (a.is_constant()) {
        add_product(b, a.terms_[0].second);
        return;
    }
    *this += a * b;
}

GradedCoefficient GradedCoefficient::operator-() const
{
    GradedCoefficient out(*this);
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

bool operator==(const GradedCoefficient& a, const GradedCoefficient& b)
{
    if (a.terms_ != b.terms_) return false;
    return a.family_ == b.family_ || (a.is_constant() && b.is_constant());
}

int grade(const GradedCoefficient& c)
{
    if (c.is_zero()) return kGradeOfZero;
    return c.terms().front().first.grade();
}

namespace {

// B_0..B_{n} by the standard recurrence sum_{j<=m} C(m+1,j) B_j = 0.
const std::vector<Rational>& bernoulli_upto(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        unsigned m = static_cast<unsigned>(table.size());
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-s / Rational(m + 1));
    }
    return table;
}

}  // namespace

GradedCoefficient classical_zeta(unsigned i)
{
    Rational b = bernoulli_upto(2 * i)[2 * i];
    Rational c = b * Rational(Integer(1) << (2 * i)) / Rational(2 * factorial(2 * i));
    if (i % 2 == 0) c = -c;
    if (i == 0) return GradedCoefficient(GeneratorFamily::PiSquared, c);
    return GradedCoefficient::pi2(i, c);
}

GradedCoefficient specialize(const GradedCoefficient& c, SpecializeTarget target)
{
    if (target == SpecializeTarget::Zero) {
        GradedCoefficient out(c.family());
        out += GradedCoefficient(c.family(), c.constant_term());
        return out;
    }
    if (c.family() == GeneratorFamily::PiSquared) return c;
    std::vector<GradedCoefficient::Term> terms;
    for (const auto& [m, r] : c.terms()) {
        Rational coeff = r;
        for (int i = 0; i < kMaxGenerators; ++i) {
            if (!m.exponent(i)) continue;
            Rational z = classical_zeta(i + 1).terms()[0].second;
            coeff *= pow(z, m.exponent(i));
        }
        Monomial pi;
        if (m.grade() > 0) pi = Monomial::generator(1, m.grade() / 2);
        terms.emplace_back(pi, coeff);
    }
    return GradedCoefficient::from_terms(GeneratorFamily::PiSquared, std::move(terms));
}

long double evaluate(const GradedCoefficient& c, const std::function<long double(int)>& zeta_value)
{
    long double total = 0;
    for (const auto& [m, r] : c.terms()) {
        long double v = static_cast<long double>(mpz_get_d(r.get_num_mpz_t())) /
                        static_cast<long double>(mpz_get_d(r.get_den_mpz_t()));
        for (int i = 0; i < kMaxGenerators; ++i)
            for (unsigned e = 0; e < m.exponent(i); ++e) v *= zeta_value(i + 1);
        total += v;
    }
    return total;
}

std::string render_monomial(const Monomial& m, GeneratorFamily family)
{
    std::string out;
    for (int i = 0; i < kMaxGenerators; ++i) {
        unsigned e = m.exponent(i);
        if (!e) continue;
        if (!out.empty()) out += '*';
        out += family == GeneratorFamily::PiSquared ? std::string("pi2") : "z" + std::to_string(2 * (i + 1));
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render(const GradedCoefficient& c)
{
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, r] : c.terms()) {
        bool negative = sgn(r) < 0;
        Rational mag = abs(r);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += render_monomial(m, c.family());
        }
    }
    return out;
}

}  // namespace specvol
