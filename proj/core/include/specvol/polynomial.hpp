#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specvol/graded.hpp"

namespace specvol {

using Exponents = std::vector<int>;

/// Higher total degree first, then lexicographically larger first.
struct ExponentOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in boundary variables (b_i or L_i) with graded coefficients.
class BoundaryPolynomial {
public:
    using TermMap = std::map<Exponents, GradedCoefficient, ExponentOrder>;

    BoundaryPolynomial(int variables, GeneratorFamily family, char symbol = 'b');

    int variables() const { return n_; }
    GeneratorFamily family() const { return family_; }
    char symbol() const { return symbol_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const GradedCoefficient& c);
    GradedCoefficient coefficient(const Exponents& exps) const;

    /// Max over terms of (variable degree + grade); kGradeOfZero for 0.
    int total_degree() const;
    bool only_even_exponents() const;
    bool is_symmetric() const;

    BoundaryPolynomial with_symbol(char symbol) const;

    BoundaryPolynomial& operator+=(const BoundaryPolynomial& other);
    BoundaryPolynomial& operator-=(const BoundaryPolynomial& other);
    BoundaryPolynomial& operator*=(const GradedCoefficient& c);
    BoundaryPolynomial& operator*=(const Rational& s);

    friend BoundaryPolynomial operator+(BoundaryPolynomial a, const BoundaryPolynomial& b) { return a += b; }
    friend BoundaryPolynomial operator-(BoundaryPolynomial a, const BoundaryPolynomial& b) { return a -= b; }
    friend BoundaryPolynomial operator*(BoundaryPolynomial a, const Rational& s) { return a *= s; }
    friend BoundaryPolynomial operator*(const Rational& s, BoundaryPolynomial a) { return a *= s; }

    /// Structural equality; the variable symbol is not compared.
    friend bool operator==(const BoundaryPolynomial& a, const BoundaryPolynomial& b);

private:
    void check_compatible(const BoundaryPolynomial& other) const;

    int n_;
    GeneratorFamily family_;
    char symbol_;
    TermMap terms_;
};

/// Terms whose total degree (variable degree + grade) equals d.
BoundaryPolynomial top_part(const BoundaryPolynomial& p, int d);

BoundaryPolynomial specialize(const BoundaryPolynomial& p, SpecializeTarget target);

/// First term (in canonical order) where a and b differ, rendered for a
/// diagnostic message; empty when equal.
std::string first_difference(const BoundaryPolynomial& a, const BoundaryPolynomial& b);

/// "1/48*b1^2 + 1/2*z2"
std::string render(const BoundaryPolynomial& p);

using Parity = std::vector<std::uint8_t>;  // 0 = even, 1 = odd

/// One polynomial per residue class mod 2 of the arguments. All 2^n classes
/// are stored, including zero ones.
class ParityQuasiPolynomial {
public:
    ParityQuasiPolynomial(int variables, GeneratorFamily family, char symbol = 'b');

    int variables() const { return n_; }
    const std::map<Parity, BoundaryPolynomial>& classes() const { return classes_; }
    const BoundaryPolynomial& at(const Parity& parity) const;
    BoundaryPolynomial& at(const Parity& parity);

    int total_degree() const;

    friend bool operator==(const ParityQuasiPolynomial&, const ParityQuasiPolynomial&) = default;

private:
    int n_;
    std::map<Parity, BoundaryPolynomial> classes_;
};

ParityQuasiPolynomial specialize(const ParityQuasiPolynomial& p, SpecializeTarget target);
std::string render_parity(const Parity& parity);

}  // namespace specvol
