#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "fixtures.hpp"
#include "specvol/extract.hpp"
#include "specvol/oracle.hpp"
#include "specvol/trec.hpp"

using namespace specvol;

namespace {

/// Crossing counts by recursive pairing of the smallest free point and an
/// all-pairs crossing test.
std::vector<Integer> brute_force_moments(int k)
{
    std::vector<Integer> counts(static_cast<std::size_t>(k * (k - 1) / 2 + 1), 0);
    std::vector<int> partner(static_cast<std::size_t>(2 * k), -1);
    std::function<void()> rec = [&] {
        int first = -1;
        for (int i = 0; i < 2 * k; ++i)
            if (partner[i] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            int crossings = 0;
            for (int a = 0; a < 2 * k; ++a)
                for (int c = a + 1; c < 2 * k; ++c) {
                    int b = partner[a], d = partner[c];
                    if (a < b && c < d && a < c && c < b && b < d) ++crossings;
                }
            ++counts[static_cast<std::size_t>(crossings)];
            return;
        }
        for (int j = first + 1; j < 2 * k; ++j) {
            if (partner[j] >= 0) continue;
            partner[first] = j;
            partner[j] = first;
            rec();
            partner[first] = partner[j] = -1;
        }
    };
    rec();
    return counts;
}

Integer sum(const std::vector<Integer>& v)
{
    Integer s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace

TEST(Chords, SmallCases)
{
    EXPECT_EQ(chord_moment(0), (std::vector<Integer>{1}));
    EXPECT_EQ(chord_moment(1), (std::vector<Integer>{1}));
    EXPECT_EQ(chord_moment(2), (std::vector<Integer>{2, 1}));
    EXPECT_EQ(chord_moment(3), (std::vector<Integer>{5, 6, 3, 1}));
    EXPECT_THROW(chord_moment(-1), std::out_of_range);
    EXPECT_THROW(chord_moment(kMaxChords + 1), std::out_of_range);
}

TEST(Chords, MatchesBruteForceEnumeration)
{
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(chord_moment(k), brute_force_moments(k)) << k;
}

TEST(Chords, MatchesClosedFormAndCounts)
{
    for (int k = 1; k <= 8; ++k) {
        auto c = chord_moment(k);
        EXPECT_EQ(c, fixtures::touchard_riordan(k)) << k;
        EXPECT_EQ(sum(c), double_factorial(2 * k - 1)) << k;
        if (k <= 7) EXPECT_EQ(c[0], brute_force_moments(k)[0]) << k;
        EXPECT_EQ(c[0], binomial(2 * k, k) / (k + 1)) << k;
    }
}

TEST(ZetaQ, HighPrecisionGroundTruth)
{
    struct Case {
        int k;
        long double q;
        long double truth;
    };
    // Summed at 40 digits before the build.
    const Case cases[] = {{1, 0.5L, 2.744033888759488360480214891492272164311L},
                          {2, 0.5L, 4.230695629402550304864753779464820547304L},
                          {3, 0.3L, 0.2308037285609537733282362111903980550353L},
                          {1, 0.9L, 143.4771236809528606836871879212765065708L}};
    for (const auto& c : cases) {
        auto v = zeta_q_numeric(c.k, c.q, 1e-14L);
        EXPECT_LE(std::fabs(v.value - c.truth), v.error_bound + 1e-17L * c.truth) << c.k << " " << (double)c.q;
        EXPECT_LE(v.error_bound, 1e-14L * v.value);
        EXPECT_LT(std::fabs(v.value - c.truth), 1e-12L * c.truth);
    }
}

TEST(ZetaQ, BoundsSurviveRefinement)
{
    for (int k = 1; k <= 4; ++k)
        for (long double q : {0.1L, 0.5L, 0.9L, 0.99L}) {
            auto coarse = zeta_q_numeric(k, q, 1e-8L);
            auto fine = zeta_q_numeric(k, q, 1e-9L);
            EXPECT_LE(std::fabs(coarse.value - fine.value), coarse.error_bound) << k << " " << (double)q;
            EXPECT_GE(fine.terms, coarse.terms);
        }
}

TEST(ZetaQ, ClassicalLimit)
{
    const long double pi2 = 9.8696044010893586188344909998761511L;
    const long double zeta[] = {pi2 / 6, pi2 * pi2 / 90, pi2 * pi2 * pi2 / 945};
    for (int k = 1; k <= 3; ++k) {
        auto v = zeta_q_numeric(k, 0.999L, 1e-12L);
        long double scaled = std::pow(1 - 0.999L, 2 * k) * v.value;
        EXPECT_NEAR(static_cast<double>(scaled / zeta[k - 1]), 1.0, 0.01) << k;
    }
}

TEST(ZetaQ, SmallQAndBadInput)
{
    auto v = zeta_q_numeric(2, 1e-3L, 1e-12L);
    EXPECT_LT(v.value, 1.1e-6L);
    EXPECT_GT(v.value, 0.9e-6L);
    EXPECT_THROW(zeta_q_numeric(1, 0.0L, 1e-6L), std::invalid_argument);
    EXPECT_THROW(zeta_q_numeric(1, 1.0L, 1e-6L), std::invalid_argument);
    EXPECT_THROW(zeta_q_numeric(0, 0.5L, 1e-6L), std::invalid_argument);
    EXPECT_THROW(zeta_q_numeric(1, 0.5L, 1e-30L), std::invalid_argument);
}

TEST(SpotCheck, DiscreteVolumes)
{
    RecursionEngine engine(CurveId::Okuyama);
    auto N11 = discrete_volume(*engine.correlator(1, 1));
    auto z2 = zeta_q_numeric(1, 0.5L, 1e-15L);
    auto check = numeric_spotcheck(N11, 0.5L, {2});
    EXPECT_EQ(check.parity, (Parity{0}));
    // 4/48 - 1/12 + zeta/2
    EXPECT_NEAR(static_cast<double>(check.value), static_cast<double>(z2.value / 2), 1e-14);

    auto N12 = discrete_volume(*engine.correlator(1, 2));
    for (long double q : {0.1L, 0.5L, 0.8L}) EXPECT_EQ(numeric_spotcheck(N12, q, {2, 3}).value, 0.0L);
    EXPECT_THROW(numeric_spotcheck(N12, 0.5L, {2}), std::invalid_argument);

    // Generators at zero agree with the Zero specialization.
    for (const auto& [parity, poly] : N12.classes())
        for (const auto& [e, c] : poly.terms()) {
            long double at_zero = evaluate(c, [](int) { return 0.0L; });
            auto exact = specialize(c, SpecializeTarget::Zero).constant_term();
            EXPECT_NEAR(static_cast<double>(at_zero), exact.get_d(), 1e-15);
        }
}
