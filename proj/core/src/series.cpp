#include "specvol/series.hpp"

#include <algorithm>
#include <limits>

namespace specvol {

SeriesError::SeriesError(const std::string& what, int degree)
    : std::domain_error(what + " (degree " + std::to_string(degree) + ")"), degree_(degree)
{
}

TruncatedLaurentSeries::TruncatedLaurentSeries(GeneratorFamily family, int low, int high)
    : family_(family), low_(low), high_(high), zero_(family)
{
    if (high < low - 1) throw SeriesError("window high below low", high);
    coeffs_.assign(static_cast<std::size_t>(high - low + 1), GradedCoefficient(family));
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(const GradedCoefficient& c, int degree, int high)
{
    TruncatedLaurentSeries s(c.family(), degree, std::max(high, degree - 1));
    if (high >= degree) s.at(degree) = c;
    return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::from_rationals(GeneratorFamily family, int low,
                                                              const std::vector<Rational>& coeffs, int high)
{
    TruncatedLaurentSeries s(family, low, high);
    for (std::size_t i = 0; i < coeffs.size() && low + static_cast<int>(i) <= high; ++i)
        s.coeffs_[i] = GradedCoefficient(family, coeffs[i]);
    return s;
}

const GradedCoefficient& TruncatedLaurentSeries::operator[](int degree) const
{
    if (degree > high_) throw SeriesError("coefficient requested past the exact window", degree);
    if (degree < low_) return zero_;
    return coeffs_[static_cast<std::size_t>(degree - low_)];
}

GradedCoefficient& TruncatedLaurentSeries::at(int degree)
{
    if (degree > high_) throw SeriesError("coefficient requested past the exact window", degree);
    if (degree < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - degree), GradedCoefficient(family_));
        low_ = degree;
    }
    return coeffs_[static_cast<std::size_t>(degree - low_)];
}

int TruncatedLaurentSeries::valuation() const
{
    for (int d = low_; d <= high_; ++d)
        if (!(*this)[d].is_zero()) return d;
    return high_ + 1;
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(int new_high) const
{
    if (new_high > high_) throw SeriesError("cannot widen a truncation window", new_high);
    int low = std::min(low_, new_high + 1);
    TruncatedLaurentSeries out(family_, low, new_high);
    for (int d = low_; d <= new_high; ++d) out.at(d) = (*this)[d];
    return out;
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(int shift) const
{
    TruncatedLaurentSeries out(*this);
    out.low_ += shift;
    out.high_ += shift;
    return out;
}

TruncatedLaurentSeries& TruncatedLaurentSeries::operator+=(const TruncatedLaurentSeries& other)
{
    int high = std::min(high_, other.high_);
    if (high < high_) *this = truncated(high);
    if (!other.is_zero() && other.family_ != family_ && family_ == GeneratorFamily::ZetaQ) family_ = other.family_;
    for (int d = other.low_; d <= high; ++d) {
        const auto& c = other[d];
        if (!c.is_zero()) at(d) += c;
    }
    return *this;
}

TruncatedLaurentSeries& TruncatedLaurentSeries::operator-=(const TruncatedLaurentSeries& other)
{
    int high = std::min(high_, other.high_);
    if (high < high_) *this = truncated(high);
    for (int d = other.low_; d <= high; ++d) {
        const auto& c = other[d];
        if (!c.is_zero()) at(d) -= c;
    }
    return *this;
}

TruncatedLaurentSeries& TruncatedLaurentSeries::operator*=(const GradedCoefficient& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedLaurentSeries& TruncatedLaurentSeries::operator*=(const Rational& s)
{
    for (auto& x : coeffs_) x *= s;
    return *this;
}

bool operator==(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b)
{
    if (a.high_ != b.high_) return false;
    for (int d = std::min(a.low_, b.low_); d <= a.high_; ++d)
        if (!(a[d] == b[d])) return false;
    return true;
}

TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, int max_degree)
{
    int va = a.valuation(), vb = b.valuation();
    int low = a.low() + b.low();
    // Known leading zeros in one factor extend the exact window of the product.
    int high = std::min({va + b.high(), vb + a.high(), max_degree});
    high = std::max(high, low - 1);
    GeneratorFamily family = a.family() == b.family() ? a.family()
                             : a.family() == GeneratorFamily::PiSquared ? a.family()
                                                                         : b.family();
    TruncatedLaurentSeries out(family, low, high);
    if (va > a.high() || vb > b.high()) return out;
    for (int i = va; i <= a.high(); ++i) {
        const auto& ca = a[i];
        if (ca.is_zero()) continue;
        for (int j = vb; j <= b.high() && i + j <= high; ++j) {
            const auto& cb = b[j];
            if (cb.is_zero()) continue;
            out.at(i + j).add_product(ca, cb);
        }
    }
    return out;
}

TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b)
{
    return series_mul(a, b, std::numeric_limits<int>::max());
}

TruncatedLaurentSeries series_exp(const TruncatedLaurentSeries& s)
{
    for (int d = s.low(); d <= std::min(0, s.high()); ++d)
        if (!s[d].is_zero()) throw SeriesError("exp of a series with a non-positive power", d);
    int high = s.high();
    TruncatedLaurentSeries out(s.family(), 0, std::max(high, 0));
    out.at(0) = GradedCoefficient(s.family(), 1);
    for (int n = 1; n <= high; ++n) {
        GradedCoefficient acc(s.family());
        for (int k = 1; k <= n; ++k) {
            if (s[k].is_zero() || out[n - k].is_zero()) continue;
            acc.add_product(s[k] * Rational(k), out[n - k]);
        }
        acc /= Rational(n);
        out.at(n) = std::move(acc);
    }
    return out;
}

TruncatedLaurentSeries series_log(const TruncatedLaurentSeries& s)
{
    for (int d = s.low(); d < 0; ++d)
        if (!s[d].is_zero()) throw SeriesError("log of a series with a negative power", d);
    if (s.high() < 0 || !(s[0] == GradedCoefficient(s.family(), 1)))
        throw SeriesError("log requires constant term 1", 0);
    int high = s.high();
    TruncatedLaurentSeries out(s.family(), 1, high);
    for (int n = 1; n <= high; ++n) {
        GradedCoefficient acc = s[n];
        GradedCoefficient inner(s.family());
        for (int k = 1; k < n; ++k) {
            if (out[k].is_zero() || s[n - k].is_zero()) continue;
            inner.add_product(out[k] * Rational(k), s[n - k]);
        }
        inner /= Rational(n);
        acc -= inner;
        out.at(n) = std::move(acc);
    }
    return out;
}

TruncatedLaurentSeries series_invert(const TruncatedLaurentSeries& s)
{
    int v = s.valuation();
    if (v > s.high()) throw SeriesError("inverting a series with no nonzero coefficient", s.high());
    const auto& lead = s[v];
    if (!lead.is_constant()) throw SeriesError("leading coefficient is not an invertible constant", v);
    Rational c = lead.constant_term();
    int len = s.high() - v;
    std::vector<GradedCoefficient> f, g;
    for (int i = 0; i <= len; ++i) f.push_back(s[v + i] / c);
    for (int n = 0; n <= len; ++n) {
        if (n == 0) {
            g.emplace_back(s.family(), 1);
            continue;
        }
        GradedCoefficient acc(s.family());
        for (int k = 1; k <= n; ++k) {
            if (f[k].is_zero() || g[n - k].is_zero()) continue;
            acc.add_product(f[k], g[n - k]);
        }
        g.push_back(-acc);
    }
    TruncatedLaurentSeries out(s.family(), -v, s.high() - 2 * v);
    for (int n = 0; n <= len; ++n) out.at(-v + n) = g[n] / c;
    return out;
}

TruncatedLaurentSeries series_pow(const TruncatedLaurentSeries& s, unsigned k)
{
    if (k == 0) {
        int rel = s.high() - s.valuation();
        return TruncatedLaurentSeries::monomial(GradedCoefficient(s.family(), 1), 0, std::max(rel, 0));
    }
    TruncatedLaurentSeries out = s;
    for (unsigned i = 1; i < k; ++i) out = series_mul(out, s);
    return out;
}

}  // namespace specvol
