#ifndef LUMBRAL_SERIES_HPP
#define LUMBRAL_SERIES_HPP

#include <string>
#include <vector>

#include "lumbral/rational.hpp"

namespace lumbral {

/// Truncated univariate formal power series: coefficients of degrees
/// 0..order-1 in the tagged variable. Binary operations require equal
/// variable tags and equal truncation orders; mixing orders is a hard
/// error rather than a silent re-truncation.
struct Series {
    char var = 't';
    int order = 0;
    std::vector<Rational> coeffs;  // coeffs.size() == order

    Series() = default;
    Series(char v, int n) : var(v), order(n), coeffs(static_cast<std::size_t>(n)) {}

    const Rational& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

    bool operator==(const Series&) const = default;

    bool is_zero() const;
    /// Largest degree with nonzero coefficient, or -1 for the zero series.
    int degree() const;
    /// f(0) = 0 and f'(0) != 0.
    bool is_delta() const;
};

Series series_monomial(char var, int order, int k, const Rational& c = 1);
Series series_constant(char var, int order, const Rational& c);

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_neg(const Series& a);
Series series_scale(const Rational& c, const Series& a);
Series series_mul(const Series& a, const Series& b);
/// Integer power by repeated truncated multiplication; e >= 0.
Series series_pow(const Series& a, int e);
/// g(f) for f with zero constant term; exact in degrees < order.
Series series_compose(const Series& g, const Series& f);
/// Multiplicative inverse; requires a(0) != 0.
Series series_reciprocal(const Series& a);
/// exp(a) for a(0) = 0.
Series series_exp(const Series& a);
/// log(a) for a(0) = 1.
Series series_log(const Series& a);

std::string series_str(const Series& a);
std::string series_json(const Series& a);

/// Truncated bivariate series in (x, y), truncated by total degree:
/// exactly the coefficients with i + j < order are stored.
struct BiSeries {
    int order = 0;
    // coeffs[i][j] = coefficient of x^i y^j, j < order - i
    std::vector<std::vector<Rational>> coeffs;

    BiSeries() = default;
    explicit BiSeries(int n);

    const Rational& at(int i, int j) const { return coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    Rational& at(int i, int j) { return coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    bool operator==(const BiSeries&) const = default;
};

BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_scale(const Rational& c, const BiSeries& a);
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);
/// Embed a univariate series as a series in x (resp. y).
BiSeries bi_from_x(const Series& p);
BiSeries bi_from_y(const Series& p);
/// Reads the y^0 row back as a univariate series in p's variable.
Series bi_set_y_zero(const BiSeries& b, char var);

/// x |-> x + y: each monomial x^m maps to sum_j C(m,j) x^j y^{m-j}.
/// Exact: the substitution preserves the total-degree filtration.
BiSeries substitute_sum(const Series& p);

}  // namespace lumbral

#endif
