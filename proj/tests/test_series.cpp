#include <cstdint>

#include "doctest.h"
#include "lumbral/series.hpp"

using namespace lumbral;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Series random_series(char var, int order, std::uint64_t& s) {
    Series r(var, order);
    for (int k = 0; k < order; ++k) r[k] = static_cast<int>(mix(s) % 19) - 9;
    return r;
}

}  // namespace

TEST_CASE("construction and degree") {
    Series z('t', 4);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    Series m = series_monomial('t', 4, 2, 5);
    CHECK(m.degree() == 2);
    CHECK(m[2] == 5);
    CHECK_FALSE(m.is_delta());
    Series d = series_monomial('t', 4, 1);
    CHECK(d.is_delta());
}

TEST_CASE("arithmetic basics") {
    Series t = series_monomial('t', 5, 1);
    Series f = series_add(t, series_mul(t, t));  // t + t^2
    Series sq = series_mul(f, f);
    CHECK(sq[0] == 0);
    CHECK(sq[1] == 0);
    CHECK(sq[2] == 1);
    CHECK(sq[3] == 2);
    CHECK(sq[4] == 1);
    CHECK(series_pow(f, 2) == sq);
    CHECK(series_pow(f, 0) == series_constant('t', 5, 1));
    CHECK_THROWS_AS(series_pow(f, -1), std::domain_error);
    Series x = series_monomial('x', 5, 1);
    CHECK_THROWS_AS(series_add(t, x), std::invalid_argument);
    CHECK_THROWS_AS(series_add(t, series_monomial('t', 4, 1)), std::invalid_argument);
}

TEST_CASE("ring laws on random series") {
    std::uint64_t s = 12345;
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_series('t', 16, s);
        Series b = random_series('t', 16, s);
        Series c = random_series('t', 16, s);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("exp and log") {
    const int N = 8;
    Series t = series_monomial('t', N, 1);
    Series e = series_exp(t);
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == Rational(1, 2));
    CHECK(e[3] == Rational(1, 6));
    CHECK(series_log(e) == t);
    Series one_plus_t = series_add(series_constant('t', N, 1), t);
    Series l = series_log(one_plus_t);
    CHECK(l[1] == 1);
    CHECK(l[2] == Rational(-1, 2));
    CHECK(l[3] == Rational(1, 3));
    CHECK(l[4] == Rational(-1, 4));
    CHECK_THROWS_AS(series_exp(one_plus_t), std::invalid_argument);
    CHECK_THROWS_AS(series_log(t), std::invalid_argument);
    // exp turns sums into products
    std::uint64_t s = 777;
    Series a = random_series('t', N, s);
    Series b = random_series('t', N, s);
    a[0] = 0;
    b[0] = 0;
    CHECK(series_exp(series_add(a, b)) == series_mul(series_exp(a), series_exp(b)));
}

TEST_CASE("reciprocal") {
    const int N = 6;
    Series one_minus_t = series_sub(series_constant('t', N, 1), series_monomial('t', N, 1));
    Series g = series_reciprocal(one_minus_t);
    for (int k = 0; k < N; ++k) CHECK(g[k] == 1);
    CHECK(series_mul(one_minus_t, g) == series_constant('t', N, 1));
    CHECK_THROWS_AS(series_reciprocal(series_monomial('t', N, 1)), std::invalid_argument);
    std::uint64_t s = 31337;
    Series a = random_series('t', N, s);
    a[0] = 3;
    CHECK(series_mul(a, series_reciprocal(a)) == series_constant('t', N, 1));
}

TEST_CASE("composition") {
    const int N = 16;
    Series t = series_monomial('t', N, 1);
    Series em1 = series_sub(series_exp(t), series_constant('t', N, 1));
    Series l1p = series_log(series_add(series_constant('t', N, 1), t));
    CHECK(series_compose(l1p, em1) == t);
    CHECK(series_compose(em1, l1p) == t);
    CHECK_THROWS_AS(series_compose(t, series_constant('t', N, 1)), std::invalid_argument);
    // (g . f) . h = g . (f . h) for delta inner series
    std::uint64_t s = 99;
    Series g = random_series('t', 10, s);
    Series f = random_series('t', 10, s);
    Series h = random_series('t', 10, s);
    f[0] = 0;
    h[0] = 0;
    CHECK(series_compose(series_compose(g, f), h) ==
          series_compose(g, series_compose(f, h)));
}

TEST_CASE("rendering") {
    Series t = series_monomial('t', 4, 1);
    Series f = series_sub(series_mul(t, t), series_scale(Rational(1, 2), t));
    CHECK(series_str(f) == "-1/2*t + t^2");
    CHECK(series_str(Series('t', 4)) == "0");
    CHECK(series_str(series_constant('t', 4, -3)) == "-3");
    CHECK(series_json(series_monomial('t', 3, 1)) ==
          "{\"var\": \"t\", \"order\": 3, \"coeffs\": [\"0\", \"1\", \"0\"]}");
}

TEST_CASE("bivariate arithmetic and substitution") {
    const int N = 6;
    Series x3 = series_monomial('x', N, 3);
    BiSeries b = substitute_sum(x3);  // (x+y)^3
    CHECK(b.at(3, 0) == 1);
    CHECK(b.at(2, 1) == 3);
    CHECK(b.at(1, 2) == 3);
    CHECK(b.at(0, 3) == 1);
    CHECK(b.at(1, 1) == 0);
    CHECK(bi_set_y_zero(b, 'x') == x3);
    // substitution is a ring morphism
    std::uint64_t s = 4242;
    Series a = Series('x', N);
    Series c = Series('x', N);
    for (int k = 0; k < N; ++k) {
        a[k] = static_cast<int>(mix(s) % 19) - 9;
        c[k] = static_cast<int>(mix(s) % 19) - 9;
    }
    CHECK(substitute_sum(series_mul(a, c)) == bi_mul(substitute_sum(a), substitute_sum(c)));
    CHECK(substitute_sum(series_add(a, c)) == bi_add(substitute_sum(a), substitute_sum(c)));
    // embeddings agree with substitution extremes
    CHECK(bi_set_y_zero(bi_from_x(a), 'x') == a);
}
