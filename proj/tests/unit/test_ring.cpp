#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "specvol/graded.hpp"
#include "specvol/polynomial.hpp"
#include "specvol/series.hpp"

using namespace specvol;

namespace {

GradedCoefficient random_coefficient(std::mt19937& rng)
{
    std::uniform_int_distribution<int> count(0, 4), exp(0, 2), num(-9, 9), den(1, 7);
    std::vector<GradedCoefficient::Term> terms;
    for (int t = count(rng); t > 0; --t) {
        Monomial m;
        for (int i = 0; i < 3; ++i) m.set_exponent(i, static_cast<unsigned>(exp(rng)));
        terms.emplace_back(m, make_rational(num(rng), den(rng)));
    }
    return GradedCoefficient::from_terms(GeneratorFamily::ZetaQ, terms);
}

TruncatedLaurentSeries random_series(std::mt19937& rng, int low, int high)
{
    TruncatedLaurentSeries s(GeneratorFamily::ZetaQ, low, high);
    for (int d = low; d <= high; ++d) s.at(d) = random_coefficient(rng);
    return s;
}

}  // namespace

TEST(Rational, LiteralsAreCanonical)
{
    EXPECT_EQ(make_rational(6, 4), Rational(3, 2));
    EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, Combinatorics)
{
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(4, 5), 0);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
}

TEST(Graded, CanonicalRendering)
{
    auto c = fixtures::parse_coefficient("1/12 - 1/2*z2 + 7/2*z2^2 + 5/2*z4", GeneratorFamily::ZetaQ);
    EXPECT_EQ(render(c), "5/2*z4 + 7/2*z2^2 - 1/2*z2 + 1/12");
    EXPECT_EQ(render(GradedCoefficient(GeneratorFamily::ZetaQ)), "0");
    EXPECT_EQ(render(GradedCoefficient::pi2(1, 2)), "2*pi2");
    EXPECT_EQ(grade(c), 4);
    EXPECT_EQ(grade(GradedCoefficient(GeneratorFamily::ZetaQ)), kGradeOfZero);
}

TEST(Graded, ClassicalZetaValues)
{
    EXPECT_EQ(classical_zeta(0), GradedCoefficient(GeneratorFamily::PiSquared, make_rational(-1, 2)));
    EXPECT_EQ(classical_zeta(1), GradedCoefficient::pi2(1, make_rational(1, 6)));
    EXPECT_EQ(classical_zeta(2), GradedCoefficient::pi2(2, make_rational(1, 90)));
    EXPECT_EQ(classical_zeta(3), GradedCoefficient::pi2(3, make_rational(1, 945)));
    EXPECT_EQ(classical_zeta(6), GradedCoefficient::pi2(6, make_rational(691, 638512875)));
}

TEST(Graded, Specialization)
{
    auto c = fixtures::parse_coefficient("7/2*z2^2 + 5/2*z4 + 1", GeneratorFamily::ZetaQ);
    // 7/2 * pi^4/36 + 5/2 * pi^4/90 = 7/72 + 1/36 = 1/8
    auto expected = GradedCoefficient::pi2(2, make_rational(1, 8)) + GradedCoefficient(GeneratorFamily::PiSquared, 1);
    EXPECT_EQ(specialize(c, SpecializeTarget::ClassicalZeta), expected);
    EXPECT_EQ(specialize(c, SpecializeTarget::Zero), GradedCoefficient(GeneratorFamily::ZetaQ, 1));
}

TEST(Graded, RingAxiomsOnRandomElements)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_coefficient(rng), b = random_coefficient(rng), c = random_coefficient(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_TRUE((a - a).is_zero());
        GradedCoefficient d = a;
        d.add_product(b, c);
        EXPECT_EQ(d, a + b * c);
        if (!a.is_zero() && !b.is_zero()) EXPECT_EQ(grade(a * b), grade(a) + grade(b));
    }
}

TEST(Series, ExpLogRoundTrip)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(rng, 1, 6);
        EXPECT_EQ(series_log(series_exp(s)), s);
        auto u = s;
        u.at(0) = GradedCoefficient(GeneratorFamily::ZetaQ, 1);
        EXPECT_EQ(series_exp(series_log(u)), u);
    }
}

TEST(Series, InverseAndPowers)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(rng, -2, 5);
        s.at(-2) = GradedCoefficient(GeneratorFamily::ZetaQ, make_rational(1, 4));
        auto prod = series_mul(s, series_invert(s));
        EXPECT_EQ(prod.valuation(), 0);
        for (int d = 1; d <= prod.high(); ++d) EXPECT_TRUE(prod[d].is_zero()) << d;
        EXPECT_EQ(prod[0], GradedCoefficient(GeneratorFamily::ZetaQ, 1));
        EXPECT_EQ(series_pow(s, 3), series_mul(series_mul(s, s), s));
    }
}

TEST(Series, WindowBookkeeping)
{
    TruncatedLaurentSeries a = TruncatedLaurentSeries::from_rationals(GeneratorFamily::ZetaQ, -2, {1, 2, 3, 4}, 1);
    TruncatedLaurentSeries b = TruncatedLaurentSeries::from_rationals(GeneratorFamily::ZetaQ, 0, {1, 1, 1}, 2);
    auto p = series_mul(a, b);
    EXPECT_EQ(p.high(), 0);  // min(-2 + 2, 0 + 1)
    EXPECT_EQ(p[-2], GradedCoefficient(GeneratorFamily::ZetaQ, 1));
    EXPECT_EQ(p[0], GradedCoefficient(GeneratorFamily::ZetaQ, 6));
    EXPECT_THROW((void)p[1], SeriesError);
    EXPECT_TRUE(p[-7].is_zero());
}

TEST(Polynomial, RenderingAndStructure)
{
    auto p = fixtures::parse_polynomial("1/2*z2 + 1/48*b1^2", 1, GeneratorFamily::ZetaQ, 'b');
    EXPECT_EQ(render(p), "1/48*b1^2 + 1/2*z2");
    EXPECT_EQ(p.total_degree(), 2);
    EXPECT_TRUE(p.only_even_exponents());
    auto q = fixtures::parse_polynomial("L1^2 + 2*L2^2", 2, GeneratorFamily::ZetaQ);
    EXPECT_FALSE(q.is_symmetric());
    EXPECT_TRUE((q + fixtures::parse_polynomial("L1^2", 2, GeneratorFamily::ZetaQ)).is_symmetric());
    EXPECT_NE(first_difference(q, q * Rational(2)), "");
    EXPECT_EQ(first_difference(q, q), "");
    auto top = top_part(fixtures::parse_polynomial("L1^4 + z2*L1^2 + L1^2 + 1", 1, GeneratorFamily::ZetaQ), 4);
    EXPECT_EQ(top, fixtures::parse_polynomial("L1^4 + z2*L1^2", 1, GeneratorFamily::ZetaQ));
}

TEST(Polynomial, QuasiPolynomialStoresEveryClass)
{
    ParityQuasiPolynomial N(3, GeneratorFamily::ZetaQ);
    EXPECT_EQ(N.classes().size(), 8u);
    EXPECT_TRUE(N.at({1, 0, 1}).is_zero());
    EXPECT_EQ(render_parity({1, 0}), "odd,even");
}
