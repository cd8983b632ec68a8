#include "specvol/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace specvol {

namespace {

int degree_of(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

std::string render_variables(const Exponents& e, char symbol)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += '*';
        out += symbol + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

bool ExponentOrder::operator()(const Exponents& a, const Exponents& b) const
{
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

BoundaryPolynomial::BoundaryPolynomial(int variables, GeneratorFamily family, char symbol)
    : n_(variables), family_(family), symbol_(symbol)
{
    if (variables < 0) throw std::invalid_argument("negative variable count");
}

void BoundaryPolynomial::add_term(const Exponents& exps, const GradedCoefficient& c)
{
    if (static_cast<int>(exps.size()) != n_) throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    if (!c.is_constant() && c.family() != family_) throw std::invalid_argument("coefficient family mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        GradedCoefficient stored(family_);
        stored += c;
        terms_.emplace(exps, std::move(stored));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GradedCoefficient BoundaryPolynomial::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? GradedCoefficient(family_) : it->second;
}

int BoundaryPolynomial::total_degree() const
{
    int best = kGradeOfZero;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e) + grade(c));
    return best;
}

bool BoundaryPolynomial::only_even_exponents() const
{
    for (const auto& [e, c] : terms_)
        for (int d : e)
            if (d % 2) return false;
    return true;
}

bool BoundaryPolynomial::is_symmetric() const
{
    for (int i = 0; i + 1 < n_; ++i) {
        for (const auto& [e, c] : terms_) {
            Exponents swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            if (!(coefficient(swapped) == c)) return false;
        }
    }
    return true;
}

BoundaryPolynomial BoundaryPolynomial::with_symbol(char symbol) const
{
    BoundaryPolynomial out(*this);
    out.symbol_ = symbol;
    return out;
}

void BoundaryPolynomial::check_compatible(const BoundaryPolynomial& other) const
{
    if (other.n_ != n_) throw std::invalid_argument("variable count mismatch");
}

BoundaryPolynomial& BoundaryPolynomial::operator+=(const BoundaryPolynomial& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

BoundaryPolynomial& BoundaryPolynomial::operator-=(const BoundaryPolynomial& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

BoundaryPolynomial& BoundaryPolynomial::operator*=(const GradedCoefficient& c)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    if (!c.is_constant()) family_ = c.family();
    return *this;
}

BoundaryPolynomial& BoundaryPolynomial::operator*=(const Rational& s)
{
    if (sgn(s) == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

bool operator==(const BoundaryPolynomial& a, const BoundaryPolynomial& b)
{
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

BoundaryPolynomial top_part(const BoundaryPolynomial& p, int d)
{
    BoundaryPolynomial out(p.variables(), p.family(), p.symbol());
    for (const auto& [e, c] : p.terms()) out.add_term(e, c.homogeneous_part(d - degree_of(e)));
    return out;
}

BoundaryPolynomial specialize(const BoundaryPolynomial& p, SpecializeTarget target)
{
    GeneratorFamily family = target == SpecializeTarget::ClassicalZeta ? GeneratorFamily::PiSquared : p.family();
    BoundaryPolynomial out(p.variables(), family, p.symbol());
    for (const auto& [e, c] : p.terms()) out.add_term(e, specialize(c, target));
    return out;
}

std::string first_difference(const BoundaryPolynomial& a, const BoundaryPolynomial& b)
{
    if (a.variables() != b.variables()) return "variable counts differ";
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    ExponentOrder less;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        Exponents key;
        if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first))) key = ia->first;
        else key = ib->first;
        GradedCoefficient ca = a.coefficient(key), cb = b.coefficient(key);
        if (!(ca == cb)) {
            std::string vars = render_variables(key, a.symbol());
            return "[" + (vars.empty() ? std::string("1") : vars) + "] " + render(ca) + " vs " + render(cb);
        }
        if (ia != a.terms().end() && ia->first == key) ++ia;
        if (ib != b.terms().end() && ib->first == key) ++ib;
    }
    return {};
}

std::string render(const BoundaryPolynomial& p)
{
    struct Piece {
        int degree;
        Exponents exps;
        Monomial mono;
        Rational coeff;
    };
    std::vector<Piece> pieces;
    for (const auto& [e, c] : p.terms())
        for (const auto& [m, r] : c.terms()) pieces.push_back({degree_of(e) + m.grade(), e, m, r});
    MonomialOrder mono_less;
    std::stable_sort(pieces.begin(), pieces.end(), [&](const Piece& x, const Piece& y) {
        if (x.degree != y.degree) return x.degree > y.degree;
        if (x.exps != y.exps) return std::lexicographical_compare(y.exps.begin(), y.exps.end(), x.exps.begin(), x.exps.end());
        return mono_less(x.mono, y.mono);
    });
    if (pieces.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& piece : pieces) {
        bool negative = sgn(piece.coeff) < 0;
        Rational mag = abs(piece.coeff);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        std::string body = render_variables(piece.exps, p.symbol());
        std::string gens = render_monomial(piece.mono, p.family());
        if (!gens.empty()) body += (body.empty() ? "" : "*") + gens;
        if (body.empty()) out += to_string(mag);
        else if (mag == 1) out += body;
        else out += to_string(mag) + "*" + body;
    }
    return out;
}

ParityQuasiPolynomial::ParityQuasiPolynomial(int variables, GeneratorFamily family, char symbol) : n_(variables)
{
    if (variables > 20) throw std::invalid_argument("too many variables for a parity table");
    for (unsigned mask = 0; mask < (1u << variables); ++mask) {
        Parity p(variables);
        for (int i = 0; i < variables; ++i) p[i] = (mask >> i) & 1u;
        classes_.emplace(std::move(p), BoundaryPolynomial(variables, family, symbol));
    }
}

const BoundaryPolynomial& ParityQuasiPolynomial::at(const Parity& parity) const
{
    auto it = classes_.find(parity);
    if (it == classes_.end()) throw std::out_of_range("unknown parity class " + render_parity(parity));
    return it->second;
}

BoundaryPolynomial& ParityQuasiPolynomial::at(const Parity& parity)
{
    auto it = classes_.find(parity);
    if (it == classes_.end()) throw std::out_of_range("unknown parity class " + render_parity(parity));
    return it->second;
}

int ParityQuasiPolynomial::total_degree() const
{
    int best = kGradeOfZero;
    for (const auto& [p, poly] : classes_) best = std::max(best, poly.total_degree());
    return best;
}

ParityQuasiPolynomial specialize(const ParityQuasiPolynomial& p, SpecializeTarget target)
{
    const auto& first = p.classes().begin()->second;
    GeneratorFamily family = target == SpecializeTarget::ClassicalZeta ? GeneratorFamily::PiSquared : first.family();
    ParityQuasiPolynomial out(p.variables(), family, first.symbol());
    for (const auto& [parity, poly] : p.classes()) out.at(parity) = specialize(poly, target);
    return out;
}

std::string render_parity(const Parity& parity)
{
    std::string out;
    for (std::size_t i = 0; i < parity.size(); ++i) {
        if (i) out += ',';
        out += parity[i] ? "odd" : "even";
    }
    return out;
}

}  // namespace specvol
