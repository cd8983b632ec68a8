#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "specvol/extract.hpp"
#include "specvol/mirzakhani.hpp"
#include "specvol/trec.hpp"

using namespace specvol;
using fixtures::parse_polynomial;

namespace {

constexpr GeneratorFamily Q = GeneratorFamily::ZetaQ;

/// Coefficient of prod z_i^(b_i - 1) in the expansion of w at z = 0, divided by
/// prod b_i, computed term by term from the geometric series.
GradedCoefficient expansion_at_zero(const CorrelationDifferential& w, const std::vector<long>& b)
{
    GradedCoefficient acc(w.family());
    long bmax = *std::max_element(b.begin(), b.end());
    for (const auto& [key, c] : w.terms) {
        Rational weight = 1;
        for (std::size_t i = 0; i < key.size(); ++i) {
            auto s = fixtures::inverse_power(Rational(-key[i].branch), key[i].order + 2, static_cast<std::size_t>(bmax));
            weight *= s[static_cast<std::size_t>(b[i] - 1)] / b[i];
        }
        acc.add_product(c, weight);
    }
    return acc;
}

Parity parity_of(const std::vector<long>& b)
{
    Parity p;
    for (long x : b) p.push_back(static_cast<std::uint8_t>(x % 2));
    return p;
}

void check_against_expansion(const CorrelationDifferential& w, long bmax)
{
    ParityQuasiPolynomial N = discrete_volume(w);
    std::vector<long> b(static_cast<std::size_t>(w.n), 1);
    while (true) {
        EXPECT_EQ(fixtures::evaluate_at(N.at(parity_of(b)), b), expansion_at_zero(w, b))
            << "(" << w.g << "," << w.n << ") b1=" << b[0];
        std::size_t i = 0;
        while (i < b.size() && b[i] == bmax) b[i++] = 1;
        if (i == b.size()) break;
        ++b[i];
    }
}

}  // namespace

TEST(Extract, N11FromDirectSeries)
{
    // The closed-form (1,1) correlator, typed in from its definition.
    auto w = base_case(CurveId::Okuyama, 1, 1);
    auto even = parse_polynomial("1/48*b1^2 + 1/2*z2 - 1/12", 1, Q, 'b');
    for (long b = 1; b <= 12; ++b) {
        GradedCoefficient expected = b % 2 ? GradedCoefficient(Q) : fixtures::evaluate_at(even, {b});
        EXPECT_EQ(expansion_at_zero(w, {b}), expected) << b;
    }
    ParityQuasiPolynomial N = discrete_volume(w);
    EXPECT_EQ(N.at({0}), even);
    EXPECT_TRUE(N.at({1}).is_zero());
    EXPECT_EQ(specialize(N.at({0}), SpecializeTarget::Zero).coefficient({0}), GradedCoefficient(Q, make_rational(-1, 12)));
}

TEST(Extract, DiscreteVolumesMatchDirectExpansion)
{
    RecursionEngine engine(CurveId::Okuyama);
    check_against_expansion(*engine.correlator(0, 3), 6);
    check_against_expansion(*engine.correlator(1, 2), 6);
    check_against_expansion(*engine.correlator(0, 4), 4);
    check_against_expansion(*engine.correlator(2, 1), 10);
}

TEST(Extract, N03Table)
{
    RecursionEngine engine(CurveId::Okuyama);
    ParityQuasiPolynomial N = discrete_volume(*engine.correlator(0, 3));
    EXPECT_EQ(fixtures::evaluate_at(N.at({0, 0, 0}), {2, 2, 2}), GradedCoefficient(Q, 1));
    EXPECT_EQ(N.at({0, 0, 0}), parse_polynomial("1", 3, Q, 'b'));
    EXPECT_EQ(N.at({1, 1, 0}), parse_polynomial("1", 3, Q, 'b'));
    EXPECT_TRUE(N.at({1, 0, 0}).is_zero());
    EXPECT_TRUE(N.at({1, 1, 1}).is_zero());
}

TEST(Extract, N12Table)
{
    RecursionEngine engine(CurveId::Okuyama);
    ParityQuasiPolynomial N = discrete_volume(*engine.correlator(1, 2));
    const std::string common =
        "1/384*b1^4 + 1/384*b2^4 + 1/192*b1^2*b2^2 + 1/4*z2*b1^2 + 1/4*z2*b2^2 - 1/32*b1^2 - 1/32*b2^2"
        " + 5/2*z4 + 7/2*z2^2 - 1/2*z2";
    EXPECT_EQ(N.at({0, 0}), parse_polynomial(common + " + 1/12", 2, Q, 'b'));
    EXPECT_EQ(N.at({1, 1}), parse_polynomial(common + " + 5/96", 2, Q, 'b'));
    EXPECT_TRUE(N.at({0, 1}).is_zero());
    EXPECT_TRUE(N.at({1, 0}).is_zero());
}

TEST(Extract, DiscreteVolumeIsEvenAndBounded)
{
    RecursionEngine engine(CurveId::Okuyama);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 2}}) {
        ParityQuasiPolynomial N = discrete_volume(*engine.correlator(g, n));
        for (const auto& [parity, poly] : N.classes()) {
            EXPECT_TRUE(poly.only_even_exponents());
            if (!poly.is_zero()) EXPECT_LE(poly.total_degree(), 6 * g - 6 + 2 * n);
        }
    }
}

TEST(Extract, DiscreteVolumeRejectsOddSurvivors)
{
    CorrelationDifferential w{CurveId::Okuyama, 1, 1, {}};
    w.add({Slot{1, 1}}, GradedCoefficient(Q, 1));  // (b+1)/2 alone is not even in b
    EXPECT_THROW(discrete_volume(w), ExtractError);
}

TEST(Extract, InverseLaplaceAnchors)
{
    RecursionEngine topq(CurveId::TopQ), wp(CurveId::WPClassical);
    EXPECT_EQ(inverse_laplace_volume(*topq.correlator(1, 1)), parse_polynomial("1/48*L1^2 + 1/2*z2", 1, Q));
    EXPECT_EQ(inverse_laplace_volume(*topq.correlator(0, 3)), parse_polynomial("1", 3, Q));
    EXPECT_EQ(inverse_laplace_volume(*wp.correlator(1, 1)),
              parse_polynomial("1/48*L1^2 + 1/12*pi2", 1, GeneratorFamily::PiSquared));
    EXPECT_EQ(inverse_laplace_volume(*topq.correlator(1, 1)).symbol(), 'L');

    CorrelationDifferential odd{CurveId::TopQ, 1, 1, {}};
    odd.add({Slot{0, 1}}, GradedCoefficient(Q, 1));
    EXPECT_THROW(inverse_laplace_volume(odd), ExtractError);
}

TEST(Extract, TopDegreeAndWPLimit)
{
    RecursionEngine engine(CurveId::Okuyama);
    auto N11 = discrete_volume(*engine.correlator(1, 1));
    EXPECT_EQ(top_degree_volume(N11, 1, 1), parse_polynomial("1/48*L1^2 + 1/2*z2", 1, Q));
    EXPECT_EQ(wp_limit(N11, 1, 1), parse_polynomial("1/48*L1^2 + 1/12*pi2", 1, GeneratorFamily::PiSquared));

    auto N12 = discrete_volume(*engine.correlator(1, 2));
    auto V12 = parse_polynomial(
        "1/192*L1^4 + 1/96*L1^2*L2^2 + 1/192*L2^4 + 1/2*z2*L1^2 + 1/2*z2*L2^2 + 7*z2^2 + 5*z4", 2, Q);
    EXPECT_EQ(top_degree_volume(N12, 1, 2), V12 * make_rational(1, 2));
    auto V12wp = parse_polynomial(
        "1/192*L1^4 + 1/96*L1^2*L2^2 + 1/192*L2^4 + 1/12*pi2*L1^2 + 1/12*pi2*L2^2 + 1/4*pi2^2", 2,
        GeneratorFamily::PiSquared);
    EXPECT_EQ(wp_limit(N12, 1, 2), V12wp * make_rational(1, 2));

    auto N21 = discrete_volume(*engine.correlator(2, 1));
    EXPECT_EQ(top_degree_volume(N21, 2, 1), MirzakhaniEngine::q_deformed().volume(2, 1) * make_rational(1, 4));

    ParityQuasiPolynomial zero(2, Q);
    EXPECT_TRUE(wp_limit(zero, 1, 2).is_zero());
}

TEST(Extract, TopDegreeDisagreementIsReported)
{
    ParityQuasiPolynomial N(1, Q);
    N.at({0}) = parse_polynomial("1/48*b1^2", 1, Q, 'b');
    N.at({1}) = parse_polynomial("1/24*b1^2", 1, Q, 'b');
    EXPECT_THROW(top_degree_volume(N, 1, 1), ExtractError);
}
