#pragma once
// Test-side helpers that deliberately avoid the library's own series and
// rendering code, so fixtures are not checked against themselves.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "specvol/graded.hpp"
#include "specvol/polynomial.hpp"
#include "specvol/rational.hpp"

namespace fixtures {

using specvol::BoundaryPolynomial;
using specvol::Exponents;
using specvol::GeneratorFamily;
using specvol::GradedCoefficient;
using specvol::Monomial;
using specvol::Rational;

/// Parses "1/2*L1^2 + 12*z2 - 3*pi2^2*L1^2" style text. Factors are a rational,
/// L<i>/b<i> variables, z<2k> generators or pi2.
inline BoundaryPolynomial parse_polynomial(const std::string& text, int n, GeneratorFamily family, char symbol = 'L')
{
    BoundaryPolynomial out(n, family, symbol);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto number = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected a number at " + std::to_string(start) + " in " + text);
        return text.substr(start, pos - start);
    };
    auto exponent = [&]() -> unsigned {
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            return static_cast<unsigned>(std::stoul(number()));
        }
        return 1;
    };
    int sign = 1;
    skip();
    if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
    }
    while (true) {
        skip();
        Rational coeff(sign);
        Exponents e(n, 0);
        Monomial m;
        while (true) {
            skip();
            char c = text.at(pos);
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = number();
                std::string den = "1";
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = number();
                }
                coeff *= specvol::make_rational(specvol::Integer(num), specvol::Integer(den));
            } else if (c == symbol) {
                ++pos;
                int i = std::stoi(number());
                e.at(i - 1) += static_cast<int>(exponent());
            } else if (text.compare(pos, 3, "pi2") == 0) {
                pos += 3;
                m.set_exponent(0, m.exponent(0) + exponent());
            } else if (c == 'z') {
                ++pos;
                int arg = std::stoi(number());
                m.set_exponent(arg / 2 - 1, m.exponent(arg / 2 - 1) + exponent());
            } else {
                throw std::invalid_argument("unexpected '" + std::string(1, c) + "' in " + text);
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        out.add_term(e, GradedCoefficient::from_terms(family, {{m, coeff}}));
        skip();
        if (pos >= text.size()) break;
        if (text[pos] == '+') sign = 1;
        else if (text[pos] == '-') sign = -1;
        else throw std::invalid_argument("expected + or - in " + text);
        ++pos;
    }
    return out;
}

inline GradedCoefficient parse_coefficient(const std::string& text, GeneratorFamily family)
{
    return parse_polynomial(text, 1, family).coefficient({0});
}

inline GradedCoefficient evaluate_at(const BoundaryPolynomial& p, const std::vector<long>& b)
{
    GradedCoefficient acc(p.family());
    for (const auto& [e, c] : p.terms()) {
        specvol::Integer w = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            specvol::Integer f;
            mpz_pow_ui(f.get_mpz_t(), specvol::Integer(b[i]).get_mpz_t(), static_cast<unsigned long>(e[i]));
            w *= f;
        }
        acc.add_product(c, Rational(w));
    }
    return acc;
}

/// Naive truncated power series over Q: coefficients of u^0..u^N.
using QSeries = std::vector<Rational>;

/// Product truncated to the length of a.
inline QSeries qmul(const QSeries& a, const QSeries& b)
{
    QSeries out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Taylor series of 1/(u + c)^p about u = 0, by repeated multiplication of the
/// geometric series.
inline QSeries inverse_power(const Rational& c, int p, std::size_t terms)
{
    QSeries geo(terms);
    Rational r = 1 / c;
    for (std::size_t l = 0; l < terms; ++l) {
        geo[l] = r;
        r *= -1 / c;
    }
    QSeries out(terms, Rational(0));
    out[0] = 1;
    for (int i = 0; i < p; ++i) out = qmul(out, geo);
    return out;
}

/// Closed-form Touchard-Riordan count of k-chord diagrams by crossings.
inline std::vector<specvol::Integer> touchard_riordan(int k)
{
    using specvol::Integer;
    // (1-q)^k T_k(q) = sum_j (-1)^j (C(2k,k-j) - C(2k,k-j-1)) q^(j(j+1)/2)
    std::vector<Integer> rhs(static_cast<std::size_t>(k * (k + 1) / 2 + k + 2), 0);
    for (int j = 0; j <= k; ++j) {
        Integer c = specvol::binomial(2 * k, k - j) - specvol::binomial(2 * k, k - j - 1);
        rhs[static_cast<std::size_t>(j * (j + 1) / 2)] += (j % 2 ? -c : c);
    }
    // divide by (1-q)^k: multiply by sum C(k-1+i, i) q^i and truncate
    std::size_t deg = k >= 2 ? static_cast<std::size_t>(k * (k - 1) / 2) : 0;
    std::vector<Integer> out(deg + 1, 0);
    for (std::size_t d = 0; d <= deg; ++d)
        for (std::size_t i = 0; i <= d; ++i)
            out[d] += rhs[d - i] * specvol::binomial(k - 1 + static_cast<long>(i), static_cast<long>(i));
    if (k == 0) out = {1};
    return out;
}

}  // namespace fixtures
