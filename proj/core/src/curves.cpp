#include "specvol/curves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace specvol {

namespace {

using RSeries = std::vector<Rational>;  // power series, index = degree

RSeries rmul(const RSeries& a, const RSeries& b, std::size_t len)
{
    RSeries out(len, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RSeries rpow(const RSeries& a, unsigned k, std::size_t len)
{
    RSeries out(len, Rational(0));
    if (len) out[0] = 1;
    for (unsigned i = 0; i < k; ++i) out = rmul(out, a, len);
    return out;
}

RSeries rinvert(const RSeries& a, std::size_t len)
{
    if (a.empty() || sgn(a[0]) == 0) throw SeriesError("power series without constant term", 0);
    RSeries out(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = n == 0 ? Rational(1) : Rational(0);
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc -= a[k] * out[n - k];
        out[n] = acc / a[0];
    }
    return out;
}

// (z - 1/z)/t about z = +1 (Plus) or -1 (Minus): 1 + 1/(1+t) or 1 + 1/(1-t).
RSeries u_over_t(Side side, std::size_t len)
{
    RSeries out(len);
    for (std::size_t i = 0; i < len; ++i) {
        bool odd = i % 2;
        out[i] = (side == Side::Plus && odd) ? -1 : 1;
    }
    if (len) out[0] = 2;
    return out;
}

TruncatedLaurentSeries compute_kernel(CurveId id, int branch, int max_degree)
{
    const SpectralCurve& c = curve_descriptor(id);
    int exp_len = max_degree + 3;  // exponential needed through degree max_degree + 2
    TruncatedLaurentSeries expo(c.family, 1, max_degree + 2);

    if (id == CurveId::Okuyama) {
        Side side = branch == 1 ? Side::Plus : Side::Minus;
        for (int m = 2; m < exp_len; ++m)
            for (int k = 1; 2 * k <= m; ++k) {
                Rational a = a_coefficient(m, k, side);
                if (sgn(a) != 0) expo.at(m) += GradedCoefficient::zeta(k, a);
            }
        // z^3 / (z^2 - 1)^2 = (alpha + t)^3 t^-2 (2 alpha + t)^-2
        Rational alpha = branch;
        std::size_t len = static_cast<std::size_t>(max_degree + 3);
        RSeries cube{alpha * alpha * alpha, 3 * alpha * alpha, 3 * alpha, 1};
        RSeries lin{2 * alpha, 1};
        RSeries pre = rmul(cube, rinvert(rpow(lin, 2, len), len), len);
        auto prefactor = TruncatedLaurentSeries::from_rationals(c.family, -2, pre, max_degree);
        return series_mul(prefactor, series_exp(expo), max_degree);
    }

    for (int j = 1; 2 * j < exp_len; ++j) {
        Rational scale = Rational(Integer(1) << (2 * j)) / j;
        if (id == CurveId::TopQ) expo.at(2 * j) = GradedCoefficient::zeta(j, scale);
        else if (id == CurveId::WPClassical) expo.at(2 * j) = classical_zeta(j) * scale;
    }
    auto prefactor = TruncatedLaurentSeries::from_rationals(c.family, -2, {Rational(1, 2)}, max_degree);
    return series_mul(prefactor, series_exp(expo), max_degree);
}

void check_branch(CurveId id, int branch)
{
    const auto& bp = curve_descriptor(id).branch_points;
    if (std::find(bp.begin(), bp.end(), branch) == bp.end())
        throw std::invalid_argument("unknown branch label " + std::to_string(branch) + " for curve " + curve_name(id));
}

}  // namespace

const SpectralCurve& curve_descriptor(CurveId id)
{
    static const SpectralCurve curves[] = {
        {CurveId::Okuyama, "okuyama", {1, -1}, GeneratorFamily::ZetaQ, true},
        {CurveId::TopQ, "topq", {0}, GeneratorFamily::ZetaQ, true},
        {CurveId::WPClassical, "wpclassical", {0}, GeneratorFamily::PiSquared, true},
        {CurveId::Airy, "airy", {0}, GeneratorFamily::PiSquared, true},
    };
    return curves[static_cast<int>(id)];
}

std::string curve_name(CurveId id)
{
    return curve_descriptor(id).name;
}

CurveId parse_curve(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "okuyama") return CurveId::Okuyama;
    if (s == "topq" || s == "top") return CurveId::TopQ;
    if (s == "wp" || s == "wpclassical") return CurveId::WPClassical;
    if (s == "airy") return CurveId::Airy;
    throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

bool one_branch(CurveId id)
{
    return id != CurveId::Okuyama;
}

Rational a_coefficient(int m, int k, Side side)
{
    if (m < 2 || k < 1 || 2 * k > m) throw std::out_of_range("a_coefficient index out of range");
    std::size_t len = static_cast<std::size_t>(m - 2 * k + 1);
    RSeries p = rpow(u_over_t(side, len), static_cast<unsigned>(2 * k), len);
    return p[len - 1] / k;
}

TruncatedLaurentSeries kernel_series(CurveId curve, int branch, int max_degree)
{
    if (max_degree < -2) throw SeriesError("kernel window must reach degree -2", max_degree);
    check_branch(curve, branch);

    static std::shared_mutex mutex;
    static std::map<std::pair<CurveId, int>, TruncatedLaurentSeries> memo;
    auto key = std::make_pair(curve, branch);
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end() && it->second.high() >= max_degree) return it->second.truncated(max_degree);
    }
    int target = max_degree;
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) target = std::max(target, 2 * it->second.high() + 2);
    }
    TruncatedLaurentSeries series = compute_kernel(curve, branch, target);
    const GradedCoefficient& lead = series[-2];
    Rational expected = curve == CurveId::Okuyama ? Rational(branch, 4) : Rational(1, 2);
    if (!(lead == GradedCoefficient(lead.family(), expected)))
        throw std::logic_error("kernel leading coefficient mismatch at branch " + std::to_string(branch));
    std::unique_lock lock(mutex);
    auto it = memo.find(key);
    if (it == memo.end() || it->second.high() < series.high()) memo.insert_or_assign(key, series);
    return series.truncated(max_degree);
}

std::vector<std::vector<SlotTerm>> omega02_bracket_series(CurveId curve, int branch, int max_degree, Omega02Part part)
{
    check_branch(curve, branch);
    bool direct = part != Omega02Part::Reflected;
    bool reflected = part != Omega02Part::Direct;
    std::vector<std::vector<SlotTerm>> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)));
    for (int m = 0; m <= max_degree; ++m) {
        std::map<int, Rational> by_order;
        if (direct) by_order[m] += m + 1;
        if (curve == CurveId::Okuyama) {
            // 1/(1 - z1 zj)^2 about z1 = alpha, with zj^m re-expanded about alpha.
            if (reflected) {
                Rational sign = m % 2 ? -1 : 1;
                for (int l = 0; l <= m; ++l) {
                    Rational a_l = (branch == -1 && l % 2) ? -1 : 1;
                    by_order[m - l] += sign * (m + 1) * Rational(binomial(m, l)) * a_l;
                }
            }
        } else if (reflected) {
            by_order[m] += m % 2 ? -(m + 1) : (m + 1);
        }
        for (auto& [k, c] : by_order)
            if (sgn(c) != 0) out[m].push_back({k, c});
        std::sort(out[m].begin(), out[m].end(), [](const SlotTerm& a, const SlotTerm& b) { return a.order > b.order; });
    }
    return out;
}

TruncatedLaurentSeries omega02_diagonal_series(CurveId curve, int branch, int max_degree)
{
    check_branch(curve, branch);
    GeneratorFamily family = curve_descriptor(curve).family;
    if (curve != CurveId::Okuyama)
        return TruncatedLaurentSeries::from_rationals(family, -2, {Rational(1, 4)}, max_degree);
    // t^-2 (2 alpha + t)^-2
    std::size_t len = static_cast<std::size_t>(std::max(max_degree + 3, 1));
    RSeries lin{Rational(2 * branch), 1};
    return TruncatedLaurentSeries::from_rationals(family, -2, rinvert(rpow(lin, 2, len), len), max_degree);
}

}  // namespace specvol
