#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "specvol/rational.hpp"

namespace specvol {

/// Which generators a coefficient ring is built on.
///
/// ZetaQ: generator index i stands for zeta_q(2(i+1)), of degree 2(i+1).
/// PiSquared: the single generator pi^2 (index 0), of degree 2. Classical
/// even zeta values live here as rational multiples of powers of pi^2.
enum class GeneratorFamily : std::uint8_t { ZetaQ, PiSquared };

inline constexpr int kMaxGenerators = 16;

/// Grade of the zero element.
inline constexpr int kGradeOfZero = std::numeric_limits<int>::min();

class Monomial {
public:
    Monomial() = default;

    /// zeta_q(2k)^power for ZetaQ, or (pi^2)^power when k == 1.
    static Monomial generator(int k, unsigned power = 1);

    unsigned exponent(int index) const { return exps_[index]; }
    void set_exponent(int index, unsigned value);

    int grade() const;
    bool is_one() const;
    int highest_index() const;  // -1 for the unit monomial

    Monomial operator*(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::array<std::uint8_t, kMaxGenerators> exps_{};
};

/// Order used for storage and rendering: higher grade first, then the larger
/// exponent on the highest-index generator first (z4 before z2^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// An exact element of Q[g_1, g_2, ...] for one generator family.
class GradedCoefficient {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit GradedCoefficient(GeneratorFamily family = GeneratorFamily::ZetaQ)
        : family_(family)
    {
    }
    GradedCoefficient(GeneratorFamily family, const Rational& constant);
    GradedCoefficient(GeneratorFamily family, long constant)
        : GradedCoefficient(family, Rational(constant))
    {
    }

    /// coeff * zeta_q(2k)^power
    static GradedCoefficient zeta(int k, const Rational& coeff = 1, unsigned power = 1);
    /// coeff * (pi^2)^power
    static GradedCoefficient pi2(unsigned power, const Rational& coeff = 1);
    static GradedCoefficient from_terms(GeneratorFamily family, std::vector<Term> terms);

    GeneratorFamily family() const { return family_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Monomials of exactly the given grade.
    GradedCoefficient homogeneous_part(int grade) const;
    bool is_homogeneous() const;

    GradedCoefficient& operator+=(const GradedCoefficient& other);
    GradedCoefficient& operator-=(const GradedCoefficient& other);
    GradedCoefficient& operator*=(const GradedCoefficient& other);
    GradedCoefficient& operator*=(const Rational& scalar);
    GradedCoefficient& operator/=(const Rational& scalar);

    /// this += a * b without temporaries for the common scalar case.
    void add_product(const GradedCoefficient& a, const Rational& b);
    void add_product(const GradedCoefficient& a, const GradedCoefficient& b);

    friend GradedCoefficient operator+(GradedCoefficient a, const GradedCoefficient& b) { return a += b; }
    friend GradedCoefficient operator-(GradedCoefficient a, const GradedCoefficient& b) { return a -= b; }
    friend GradedCoefficient operator*(const GradedCoefficient& a, const GradedCoefficient& b);
    friend GradedCoefficient operator*(GradedCoefficient a, const Rational& s) { return a *= s; }
    friend GradedCoefficient operator*(const Rational& s, GradedCoefficient a) { return a *= s; }
    friend GradedCoefficient operator/(GradedCoefficient a, const Rational& s) { return a /= s; }
    GradedCoefficient operator-() const;

    friend bool operator==(const GradedCoefficient& a, const GradedCoefficient& b);

private:
    void adopt_family(const GradedCoefficient& other);
    void merge(std::vector<Term>&& other_sorted, bool negate);

    GeneratorFamily family_;
    std::vector<Term> terms_;  // sorted by MonomialOrder, no zero coefficients
};

/// Max over monomials of the weighted degree; kGradeOfZero for 0.
int grade(const GradedCoefficient& c);

/// zeta(2i) = (-1)^(i+1) B_{2i} (2 pi)^(2i) / (2 (2i)!), with zeta(0) = -1/2.
GradedCoefficient classical_zeta(unsigned i);

enum class SpecializeTarget { ClassicalZeta, Zero };

/// ClassicalZeta: zeta_q(2k) -> zeta(2k) in Q[pi^2]. Zero: every generator -> 0.
GradedCoefficient specialize(const GradedCoefficient& c, SpecializeTarget target);

/// Substitutes a floating value for each generator; zeta_value(k) supplies
/// zeta_q(2k) (ZetaQ) or pi^2 (PiSquared, k == 1).
long double evaluate(const GradedCoefficient& c, const std::function<long double(int)>& zeta_value);

/// Canonical text: "5/2*z4 + 7/2*z2^2 - 1/2*z2 + 1/12". Zero renders as "0".
std::string render(const GradedCoefficient& c);
std::string render_monomial(const Monomial& m, GeneratorFamily family);

}  // namespace specvol
