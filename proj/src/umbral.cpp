#include "lumbral/umbral.hpp"

#include <sstream>
#include <stdexcept>

namespace lumbral {

std::vector<std::vector<Rational>> matrix_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational m = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= m * a[col][j];
                inv[r][j] -= m * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

void require_delta(const Series& f) {
    if (!f.is_delta())
        throw std::invalid_argument("not a delta series: constant term must vanish and the "
                                    "linear coefficient must be nonzero");
}

}  // namespace

Series e_lambda(const Rational& lambda, int order, char var) {
    Series r(var, order);
    Rational lk = 1;  // lambda^{k-1}
    for (int k = 1; k < order; ++k) {
        r[k] = lk / Rational(factorial(k));
        lk *= lambda;
    }
    return r;
}

PseudoBasis e_lambda_basis(const Rational& lambda, int order, char var) {
    PseudoBasis B(var, order);
    B.rows.reserve(static_cast<std::size_t>(order));
    Series e = e_lambda(lambda, order, var);
    Series row = series_constant(var, order, 1);
    for (int n = 0; n < order; ++n) {
        B.rows.push_back(row);
        row = series_mul(row, e);
    }
    return B;
}

PseudoBasis tau_basis(const Series& f, const Rational& lambda, int order) {
    if (f.order != order)
        throw std::invalid_argument("tau_basis: series order mismatch");
    require_delta(f);
    PseudoBasis B(f.var, order);
    B.rows.reserve(static_cast<std::size_t>(order));
    Series row = series_constant(f.var, order, 1);
    for (int n = 0; n < order; ++n) {
        B.rows.push_back(row);
        // tau_{n+1} = tau_n * (f - n*lambda) / (n+1)
        Series shifted = f;
        shifted[0] -= Rational(n) * lambda;
        row = series_scale(Rational(1, n + 1), series_mul(row, shifted));
    }
    return B;
}

std::vector<Rational> basis_expand(const Series& p, const PseudoBasis& B) {
    if (p.var != B.var || p.order != B.order)
        throw std::invalid_argument("basis_expand: variable/order mismatch");
    const int N = B.order;
    bool val_triangular = true;  // row n starts at degree n (series bases)
    bool deg_triangular = true;  // row n ends at degree n (polynomial bases)
    for (int n = 0; n < N; ++n) {
        if (B.row(n)[n] == 0)
            throw std::invalid_argument("basis_expand: zero diagonal entry at row " +
                                        std::to_string(n) + ", not a pseudo-basis");
        for (int m = 0; m < n && val_triangular; ++m)
            if (B.row(n)[m] != 0) val_triangular = false;
        for (int m = n + 1; m < N && deg_triangular; ++m)
            if (B.row(n)[m] != 0) deg_triangular = false;
    }
    std::vector<Rational> c(static_cast<std::size_t>(N));
    if (val_triangular || deg_triangular) {
        Series rem = p;
        for (int step = 0; step < N; ++step) {
            const int n = val_triangular ? step : N - 1 - step;
            if (rem[n] == 0) continue;
            const Rational cn = rem[n] / B.row(n)[n];
            c[static_cast<std::size_t>(n)] = cn;
            rem = series_sub(rem, series_scale(cn, B.row(n)));
        }
        if (!rem.is_zero()) throw std::logic_error("basis_expand: nonzero remainder");
        return c;
    }
    // general case: solve M^T c = p where M[n][m] is the degree-m
    // coefficient of row n
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) M[static_cast<std::size_t>(n)] = B.row(n).coeffs;
    const auto inv = matrix_inverse(std::move(M));
    for (int n = 0; n < N; ++n) {
        Rational s = 0;
        for (int m = 0; m < N; ++m)
            s += p[m] * inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
        c[static_cast<std::size_t>(n)] = s;
    }
    return c;
}

Rational pair_lambda(const BaxterElement& u, const Series& p, const PseudoBasis& q) {
    if (u.order != q.order) throw std::invalid_argument("pair_lambda: order mismatch");
    const std::vector<Rational> c = basis_expand(p, q);
    Rational s = 0;
    for (int n = 0; n < q.order; ++n) s += u[n] * c[static_cast<std::size_t>(n)];
    return s;
}

Rational pair_classical(const Series& f, const Series& p) {
    if (f.order != p.order) throw std::invalid_argument("pair_classical: order mismatch");
    Rational s = 0;
    Integer kfac = 1;
    for (int k = 0; k < f.order; ++k) {
        if (k > 0) kfac *= k;
        if (f[k] != 0 && p[k] != 0) s += Rational(kfac) * f[k] * p[k];
    }
    return s;
}

PseudoBasis associated_sequence(const Series& f, const Rational& lambda, int order) {
    require_delta(f);
    const int N = order;
    PseudoBasis tf = tau_basis(f, lambda, N);
    Series t = series_monomial(f.var, N, 1);
    PseudoBasis tt = tau_basis(t, lambda, N);
    std::vector<std::vector<Rational>> A;
    A.reserve(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) A.push_back(basis_expand(tf.row(n), tt));
    const std::vector<std::vector<Rational>> Ainv = matrix_inverse(std::move(A));
    PseudoBasis q = e_lambda_basis(lambda, N);
    PseudoBasis S('x', N);
    S.rows.reserve(static_cast<std::size_t>(N));
    // s_k = sum_j (A^{-1})[j][k] q_j, i.e. the rows of (A^{-1})^T in the q basis
    for (int k = 0; k < N; ++k) {
        Series s('x', N);
        for (int j = 0; j < N; ++j) {
            const Rational& b = Ainv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            if (b != 0) s = series_add(s, series_scale(b, q.row(j)));
        }
        S.rows.push_back(std::move(s));
    }
    return S;
}

Series u_action(int k, const Series& p, const PseudoBasis& q, const Rational& lambda) {
    if (k < 0) throw std::domain_error("u_action: negative index");
    const std::vector<Rational> c = basis_expand(p, q);
    Series r(q.var, q.order);
    for (int n = 0; n < q.order; ++n) {
        const Rational& cn = c[static_cast<std::size_t>(n)];
        if (cn == 0 || k > n) continue;
        const Integer cnk = binomial(n, k);
        Rational li = 1;
        for (int i = 0; i <= k; ++i) {
            const Rational w = cn * Rational(cnk * binomial(k, i)) * li;
            if (w != 0) r = series_add(r, series_scale(w, q.row(n - k + i)));
            li *= lambda;
        }
    }
    return r;
}

std::vector<std::vector<Rational>> coproduct_matrix(int n, const Rational& lambda, int order) {
    if (n >= order) throw std::invalid_argument("coproduct_matrix: index exceeds order");
    std::vector<std::vector<Rational>> c(
        static_cast<std::size_t>(order), std::vector<Rational>(static_cast<std::size_t>(order)));
    // term (i, j): lambda^i C(n,j) C(j,i) q_{n+i-j} (x) q_j, so a = n+i-j, b = j
    for (int b = 0; b < order; ++b) {
        for (int a = 0; a < order; ++a) {
            const int ii = a + b - n;
            if (ii < 0 || ii > b) continue;
            c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                rat_pow(lambda, ii) * Rational(binomial(n, b) * binomial(b, ii));
        }
    }
    return c;
}

BiSeries shift_bivariate(const Series& p) { return substitute_sum(p); }

std::string pseudobasis_str(const PseudoBasis& B) {
    std::ostringstream os;
    for (int n = 0; n < B.order; ++n) {
        os << "p" << n << " = " << series_str(B.row(n)) << "\n";
    }
    return os.str();
}

std::string pseudobasis_json(const PseudoBasis& B) {
    std::ostringstream os;
    os << "{\"var\": \"" << B.var << "\", \"order\": " << B.order << ", \"rows\": [";
    for (int n = 0; n < B.order; ++n) {
        if (n) os << ", ";
        os << "[";
        for (int m = 0; m < B.order; ++m) {
            if (m) os << ", ";
            os << "\"" << rat_str(B.row(n)[m]) << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace lumbral
