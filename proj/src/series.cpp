#include "lumbral/series.hpp"

#include <sstream>
#include <stdexcept>

namespace lumbral {

namespace {

void require_compatible(const Series& a, const Series& b) {
    if (a.var != b.var)
        throw std::invalid_argument(std::string("variable mismatch: ") + a.var + " vs " + b.var);
    if (a.order != b.order)
        throw std::invalid_argument("order mismatch: " + std::to_string(a.order) + " vs " +
                                    std::to_string(b.order));
}

}  // namespace

bool Series::is_zero() const { return degree() < 0; }

int Series::degree() const {
    for (int k = order - 1; k >= 0; --k)
        if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
}

bool Series::is_delta() const {
    return order >= 2 && coeffs[0] == 0 && coeffs[1] != 0;
}

Series series_monomial(char var, int order, int k, const Rational& c) {
    Series s(var, order);
    if (k >= 0 && k < order) s[k] = c;
    return s;
}

Series series_constant(char var, int order, const Rational& c) {
    return series_monomial(var, order, 0, c);
}

Series series_add(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (int k = 0; k < r.order; ++k) r[k] += b[k];
    return r;
}

Series series_sub(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (int k = 0; k < r.order; ++k) r[k] -= b[k];
    return r;
}

Series series_neg(const Series& a) { return series_scale(-1, a); }

Series series_scale(const Rational& c, const Series& a) {
    Series r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r(a.var, a.order);
    for (int i = 0; i < a.order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < a.order; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series series_pow(const Series& a, int e) {
    if (e < 0) throw std::domain_error("series_pow: negative exponent");
    Series r = series_constant(a.var, a.order, 1);
    for (int i = 0; i < e; ++i) r = series_mul(r, a);
    return r;
}

Series series_compose(const Series& g, const Series& f) {
    if (g.order != f.order)
        throw std::invalid_argument("order mismatch in composition");
    if (f.order > 0 && f[0] != 0)
        throw std::invalid_argument("series_compose: inner series has nonzero constant term");
    // Horner evaluation: result = g_0 + f*(g_1 + f*(g_2 + ...)).
    Series r(f.var, f.order);
    for (int k = g.order - 1; k >= 0; --k) {
        r = series_mul(r, f);
        r[0] += g[k];
    }
    r.var = f.var;
    return r;
}

Series series_reciprocal(const Series& a) {
    if (a.order == 0 || a[0] == 0)
        throw std::invalid_argument("series_reciprocal: zero constant term");
    Series r(a.var, a.order);
    r[0] = Rational(1) / a[0];
    for (int k = 1; k < a.order; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

Series series_exp(const Series& a) {
    if (a.order > 0 && a[0] != 0)
        throw std::invalid_argument("series_exp: nonzero constant term");
    Series r = series_constant(a.var, a.order, 1);
    Series pw = series_constant(a.var, a.order, 1);
    for (int k = 1; k < a.order; ++k) {
        pw = series_mul(pw, a);
        if (pw.is_zero()) break;
        r = series_add(r, series_scale(Rational(1) / Rational(factorial(k)), pw));
    }
    return r;
}

Series series_log(const Series& a) {
    if (a.order == 0 || a[0] != 1)
        throw std::invalid_argument("series_log: constant term must be 1");
    Series u = a;
    u[0] = 0;  // a - 1
    Series r(a.var, a.order);
    Series pw = series_constant(a.var, a.order, 1);
    for (int k = 1; k < a.order; ++k) {
        pw = series_mul(pw, u);
        if (pw.is_zero()) break;
        Rational c = Rational((k % 2 == 1) ? 1 : -1) / k;
        r = series_add(r, series_scale(c, pw));
    }
    return r;
}

std::string series_str(const Series& a) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < a.order; ++k) {
        const Rational& c = a[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rat_str(mag);
        } else {
            if (mag != 1) os << rat_str(mag) << "*";
            os << a.var;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string series_json(const Series& a) {
    std::ostringstream os;
    os << "{\"var\": \"" << a.var << "\", \"order\": " << a.order << ", \"coeffs\": [";
    for (int k = 0; k < a.order; ++k) {
        if (k) os << ", ";
        os << "\"" << rat_str(a[k]) << "\"";
    }
    os << "]}";
    return os.str();
}

BiSeries::BiSeries(int n) : order(n) {
    coeffs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        coeffs[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n - i));
}

BiSeries bi_add(const BiSeries& a, const BiSeries& b) {
    if (a.order != b.order) throw std::invalid_argument("bivariate order mismatch");
    BiSeries r = a;
    for (int i = 0; i < r.order; ++i)
        for (int j = 0; i + j < r.order; ++j) r.at(i, j) += b.at(i, j);
    return r;
}

BiSeries bi_scale(const Rational& c, const BiSeries& a) {
    BiSeries r = a;
    for (auto& row : r.coeffs)
        for (auto& x : row) x *= c;
    return r;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    if (a.order != b.order) throw std::invalid_argument("bivariate order mismatch");
    const int N = a.order;
    BiSeries r(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; i + j < N; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; i + j + k < N; ++k)
                for (int l = 0; i + j + k + l < N; ++l) {
                    if (b.at(k, l) == 0) continue;
                    r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

BiSeries bi_from_x(const Series& p) {
    BiSeries r(p.order);
    for (int i = 0; i < p.order; ++i) r.at(i, 0) = p[i];
    return r;
}

BiSeries bi_from_y(const Series& p) {
    BiSeries r(p.order);
    for (int j = 0; j < p.order; ++j) r.at(0, j) = p[j];
    return r;
}

Series bi_set_y_zero(const BiSeries& b, char var) {
    Series r(var, b.order);
    for (int i = 0; i < b.order; ++i) r[i] = b.at(i, 0);
    return r;
}

BiSeries substitute_sum(const Series& p) {
    BiSeries r(p.order);
    for (int m = 0; m < p.order; ++m) {
        if (p[m] == 0) continue;
        for (int j = 0; j <= m; ++j)
            r.at(j, m - j) += p[m] * Rational(binomial(m, j));
    }
    return r;
}

}  // namespace lumbral
