#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specvol/graded.hpp"

namespace specvol {

class SeriesError : public std::domain_error {
public:
    SeriesError(const std::string& what, int degree);
    int degree() const { return degree_; }

private:
    int degree_;
};

/// One-variable Laurent series sum_{d=low}^{high} c_d t^d whose coefficients are
/// exact for every degree <= high. Degrees below low are zero.
class TruncatedLaurentSeries {
public:
    TruncatedLaurentSeries(GeneratorFamily family, int low, int high);

    static TruncatedLaurentSeries monomial(const GradedCoefficient& c, int degree, int high);
    static TruncatedLaurentSeries from_rationals(GeneratorFamily family, int low,
                                                 const std::vector<Rational>& coeffs, int high);

    GeneratorFamily family() const { return family_; }
    int low() const { return low_; }
    int high() const { return high_; }

    /// Coefficient of t^degree; zero below low. Throws past high.
    const GradedCoefficient& operator[](int degree) const;
    /// Mutable coefficient; extends the stored range downward when needed.
    GradedCoefficient& at(int degree);

    /// Lowest degree with a nonzero coefficient, or high + 1.
    int valuation() const;
    bool is_zero() const { return valuation() > high_; }

    TruncatedLaurentSeries truncated(int new_high) const;
    /// Multiply by t^shift.
    TruncatedLaurentSeries shifted(int shift) const;

    TruncatedLaurentSeries& operator+=(const TruncatedLaurentSeries& other);
    TruncatedLaurentSeries& operator-=(const TruncatedLaurentSeries& other);
    TruncatedLaurentSeries& operator*=(const GradedCoefficient& c);
    TruncatedLaurentSeries& operator*=(const Rational& s);

    friend TruncatedLaurentSeries operator+(TruncatedLaurentSeries a, const TruncatedLaurentSeries& b) { return a += b; }
    friend TruncatedLaurentSeries operator-(TruncatedLaurentSeries a, const TruncatedLaurentSeries& b) { return a -= b; }

    friend bool operator==(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);

private:
    GeneratorFamily family_;
    int low_;
    int high_;
    std::vector<GradedCoefficient> coeffs_;  // degrees low_..high_
    GradedCoefficient zero_;
};

/// Product, exact on [low_a + low_b, min(low_a + high_b, low_b + high_a)].
TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
/// Product restricted to degrees <= max_degree (skips work past it).
TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, int max_degree);

/// Requires every coefficient of degree <= 0 to vanish.
TruncatedLaurentSeries series_exp(const TruncatedLaurentSeries& s);
/// Requires no negative-degree terms and constant term 1.
TruncatedLaurentSeries series_log(const TruncatedLaurentSeries& s);
/// Requires the lowest nonzero coefficient to be a nonzero rational constant.
TruncatedLaurentSeries series_invert(const TruncatedLaurentSeries& s);
/// s^k for k >= 0.
TruncatedLaurentSeries series_pow(const TruncatedLaurentSeries& s, unsigned k);

}  // namespace specvol
