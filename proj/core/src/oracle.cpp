#include "specvol/oracle.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace specvol {

namespace {

// All diagrams whose first chord is (0, first). Pairs the smallest free point
// with each free candidate in turn, tracking crossings incrementally.
std::vector<Integer> enumerate_from(int k, int first)
{
    const int points = 2 * k;
    std::vector<Integer> counts(static_cast<std::size_t>(k * (k - 1) / 2 + 1), 0);
    std::vector<int> partner(static_cast<std::size_t>(points), -1);
    partner[0] = first;
    partner[static_cast<std::size_t>(first)] = 0;

    auto next_free = [&](int from) {
        for (int p = from; p < points; ++p)
            if (partner[static_cast<std::size_t>(p)] < 0) return p;
        return points;
    };

    struct Frame {
        int a;
        int b;
        int cross;
    };
    std::vector<Frame> frames;
    int crossings = 0;
    int start = next_free(1);
    if (start == points) {
        counts[0] = 1;
        return counts;
    }
    frames.push_back({start, start, 0});
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.b != f.a) {
            partner[static_cast<std::size_t>(f.a)] = partner[static_cast<std::size_t>(f.b)] = -1;
            crossings -= f.cross;
        }
        f.b = next_free(f.b + 1);
        if (f.b == points) {
            frames.pop_back();
            continue;
        }
        // Earlier chords start left of a; one crosses (a, b) iff it ends inside.
        int cross = 0;
        for (int p = f.a + 1; p < f.b; ++p) {
            int q = partner[static_cast<std::size_t>(p)];
            if (q >= 0 && q < f.a) ++cross;
        }
        partner[static_cast<std::size_t>(f.a)] = f.b;
        partner[static_cast<std::size_t>(f.b)] = f.a;
        f.cross = cross;
        crossings += cross;
        int a2 = next_free(f.a + 1);
        if (a2 == points) ++counts[static_cast<std::size_t>(crossings)];
        else frames.push_back({a2, a2, 0});
    }
    return counts;
}

}  // namespace

std::vector<Integer> chord_moment(int k)
{
    if (k < 0 || k > kMaxChords) throw std::out_of_range("chord count must lie in [0, 10]");
    if (k == 0) return {Integer(1)};
    std::vector<std::future<std::vector<Integer>>> parts;
    for (int first = 1; first < 2 * k; ++first) {
        auto policy = k >= 7 ? std::launch::async : std::launch::deferred;
        parts.push_back(std::async(policy, enumerate_from, k, first));
    }
    std::vector<Integer> total(static_cast<std::size_t>(k * (k - 1) / 2 + 1), 0);
    for (auto& part : parts) {
        auto counts = part.get();
        for (std::size_t i = 0; i < counts.size(); ++i) total[i] += counts[i];
    }
    while (total.size() > 1 && total.back() == 0) total.pop_back();
    return total;
}

ZetaQValue zeta_q_numeric(int k, long double q, long double rel_tol)
{
    if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("zeta_q needs k >= 1");
    const long double eps = std::numeric_limits<long double>::epsilon();
    if (!(rel_tol >= 64 * eps)) throw std::invalid_argument("tolerance below the rounding floor");

    const long double log_q = std::log(q);
    const long double ratio_gap = -std::expm1(k * log_q);  // 1 - q^k
    auto log_term = [&](long m) {
        long double one_minus = -std::expm1(m * log_q);
        return m * k * log_q - 2 * k * std::log(one_minus);
    };

    // Neumaier summation; each term carries about |x| ulps from exp/log.
    long double sum = 0, comp = 0, weighted = 0;
    const long max_terms = 100000000;
    for (long m = 1;; ++m) {
        if (m > max_terms) throw std::invalid_argument("zeta_q sum does not converge in the term budget");
        long double x = log_term(m);
        long double t = std::exp(x);
        weighted += t * (std::fabs(x) + 1);
        long double s = sum + t;
        comp += std::fabs(sum) >= std::fabs(t) ? (sum - s) + t : (t - s) + sum;
        sum = s;
        long double tail = std::exp(log_term(m + 1)) / ratio_gap;
        long double rounding = eps * (8 * sum + 4 * weighted);
        long double target = rel_tol * (sum + comp);
        if (rounding > target) throw std::invalid_argument("tolerance below the rounding floor");
        if (tail + rounding <= target) {
            ZetaQValue out;
            out.value = sum + comp;
            out.error_bound = tail + rounding;
            out.terms = m;
            return out;
        }
    }
}

long double specialize_numeric(const GradedCoefficient& c, long double q, long double rel_tol)
{
    if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0,1)");
    if (c.family() != GeneratorFamily::ZetaQ && !c.is_constant())
        throw std::invalid_argument("numeric specialization needs a ZetaQ coefficient");
    std::vector<long double> cache(kMaxGenerators + 1, -1);
    return evaluate(c, [&](int k) {
        if (cache[static_cast<std::size_t>(k)] < 0) cache[static_cast<std::size_t>(k)] = zeta_q_numeric(k, q, rel_tol).value;
        return cache[static_cast<std::size_t>(k)];
    });
}

SpotCheck numeric_spotcheck(const ParityQuasiPolynomial& N, long double q, const std::vector<long>& b,
                            long double rel_tol)
{
    if (static_cast<int>(b.size()) != N.variables())
        throw std::invalid_argument("boundary vector length does not match the quasi-polynomial");
    SpotCheck out;
    for (long v : b) out.parity.push_back(static_cast<std::uint8_t>(((v % 2) + 2) % 2));
    const BoundaryPolynomial& poly = N.at(out.parity);
    for (const auto& [e, c] : poly.terms()) {
        long double mono = 1;
        for (std::size_t i = 0; i < e.size(); ++i) mono *= std::pow(static_cast<long double>(b[i]), e[i]);
        out.value += mono * specialize_numeric(c, q, rel_tol);
    }
    return out;
}

}  // namespace specvol
