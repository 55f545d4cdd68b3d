#include "doctest.h"
#include "lumbral/parser.hpp"
#include "lumbral/umbral.hpp"

using namespace lumbral;

namespace {

PseudoBasis monomials(int order) {
    PseudoBasis B('x', order);
    for (int n = 0; n < order; ++n) B.rows.push_back(series_monomial('x', order, n));
    return B;
}

}  // namespace

TEST_CASE("exponential-type delta series") {
    CHECK(e_lambda(0, 5) == series_monomial('x', 5, 1));
    Series e1 = e_lambda(1, 4);
    CHECK(e1[1] == 1);
    CHECK(e1[2] == Rational(1, 2));
    CHECK(e1[3] == Rational(1, 6));
    Series e2 = e_lambda(2, 4);
    CHECK(e2[1] == 1);
    CHECK(e2[2] == 1);
    CHECK(e2[3] == Rational(2, 3));
    // functional equation e(x+y) = e(x) + e(y) + lambda e(x) e(y)
    for (const char* lam : {"0", "1", "-1", "1/2"}) {
        const Rational L = rat_parse(lam);
        Series e = e_lambda(L, 8);
        BiSeries lhs = substitute_sum(e);
        BiSeries ex = bi_from_x(e), ey = bi_from_y(e);
        BiSeries rhs = bi_add(bi_add(ex, ey), bi_scale(L, bi_mul(ex, ey)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reference basis rows") {
    PseudoBasis B0 = e_lambda_basis(0, 5);
    CHECK(B0 == monomials(5));
    PseudoBasis B1 = e_lambda_basis(1, 5);
    CHECK(B1.row(0) == series_constant('x', 5, 1));
    CHECK(B1.row(2)[2] == 1);
    CHECK(B1.row(2)[3] == 1);
    CHECK(B1.row(2)[4] == Rational(7, 12));
    CHECK(B1.row(2)[0] == 0);
    CHECK(B1.row(2)[1] == 0);
}

TEST_CASE("divided-power rows") {
    const int N = 6;
    Series t = series_monomial('t', N, 1);
    PseudoBasis T0 = tau_basis(t, 0, N);
    for (int n = 0; n < N; ++n)
        CHECK(T0.row(n) == series_monomial('t', N, n, Rational(1) / Rational(factorial(n))));
    for (const char* lam : {"0", "1", "-1", "1/2"}) {
        const Rational L = rat_parse(lam);
        PseudoBasis T = tau_basis(t, L, N);
        Series want(series_monomial('t', N, 2, Rational(1, 2)));
        want[1] = -L / 2;
        CHECK(T.row(2) == want);
    }
    Series f = series_parse("t + t^2", 't', 4);
    PseudoBasis Tf = tau_basis(f, 1, 4);
    Series want('t', 4);
    want[1] = Rational(-1, 2);
    want[3] = 1;
    CHECK(Tf.row(2) == want);
    CHECK_THROWS_AS(tau_basis(series_parse("t^2", 't', 4), 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(tau_basis(series_parse("1+t", 't', 4), 1, 4), std::invalid_argument);
}

TEST_CASE("basis expansion") {
    const int N = 6;
    PseudoBasis M = monomials(N);
    auto c = basis_expand(series_monomial('x', N, 2), M);
    for (int n = 0; n < N; ++n) CHECK(c[static_cast<std::size_t>(n)] == (n == 2 ? 1 : 0));
    PseudoBasis B = e_lambda_basis(1, N);
    for (int k = 0; k < N; ++k) {
        auto ck = basis_expand(B.row(k), B);
        for (int n = 0; n < N; ++n) CHECK(ck[static_cast<std::size_t>(n)] == (n == k ? 1 : 0));
    }
    // x = sum_n c_n (e^x - 1)^n with c the log(1+u) coefficients
    auto cx = basis_expand(series_monomial('x', N, 1), B);
    CHECK(cx[0] == 0);
    CHECK(cx[1] == 1);
    CHECK(cx[2] == Rational(-1, 2));
    CHECK(cx[3] == Rational(1, 3));
    CHECK(cx[4] == Rational(-1, 4));
    CHECK(cx[5] == Rational(1, 5));
    // degree-triangular rows expand too
    Series t = series_monomial('t', N, 1);
    PseudoBasis T = tau_basis(t, 1, N);
    auto ct = basis_expand(series_parse("t^2", 't', N), T);
    CHECK(ct[2] == 2);  // t^2 = 2 (t^2/2 - t/2) + t
    CHECK(ct[1] == 1);
    PseudoBasis bad = monomials(N);
    bad.rows[3] = Series('x', N);
    CHECK_THROWS_AS(basis_expand(series_monomial('x', N, 1), bad), std::invalid_argument);
}

TEST_CASE("weighted pairing") {
    const int N = 8;
    for (const char* lam : {"0", "1", "1/2"}) {
        const Rational L = rat_parse(lam);
        PseudoBasis q = e_lambda_basis(L, N);
        for (int n = 0; n < N; ++n)
            for (int k = 0; k < N; ++k)
                CHECK(pair_lambda(baxter_unit(L, N, n), q.row(k), q) == ((n == k) ? 1 : 0));
    }
    PseudoBasis q = e_lambda_basis(1, N);
    BaxterElement u = baxter_add(baxter_unit(1, N, 0), baxter_unit(1, N, 1, 2));
    CHECK(pair_lambda(u, series_scale(3, q.row(1)), q) == 6);
    CHECK(pair_lambda(BaxterElement(Rational(1), N), q.row(1), q) == 0);
}

TEST_CASE("classical pairing") {
    const int N = 8;
    for (int k = 0; k < N; ++k)
        for (int n = 0; n < N; ++n) {
            Series f = series_monomial('t', N, k, Rational(1) / Rational(factorial(k)));
            CHECK(pair_classical(f, series_monomial('x', N, n)) == ((k == n) ? 1 : 0));
        }
    Series f = series_monomial('t', N, 1);
    Series p = series_add(series_monomial('x', N, 2, Rational(1, 2)),
                          series_monomial('x', N, 1));
    CHECK(pair_classical(f, p) == 1);
    Series tau2 = tau_basis(series_monomial('t', N, 1), 1, N).row(2);
    Series q2 = e_lambda_basis(1, N).row(2);
    CHECK(pair_classical(tau2, q2) == 1);
}

TEST_CASE("associated sequences") {
    for (const char* lam : {"0", "1", "1/2"}) {
        const Rational L = rat_parse(lam);
        Series t = series_monomial('t', 6, 1);
        CHECK(associated_sequence(t, L, 6) == e_lambda_basis(L, 6));
    }
    PseudoBasis S = associated_sequence(series_parse("exp(t)-1", 't', 5), 0, 5);
    CHECK(S.row(0) == series_constant('x', 5, 1));
    CHECK(S.row(1) == series_monomial('x', 5, 1));
    CHECK(S.row(2) == series_parse("x^2 - x", 'x', 5));
    CHECK(S.row(3) == series_parse("x^3 - 3*x^2 + 2*x", 'x', 5));
    CHECK(S.row(4) == series_parse("x^4 - 6*x^3 + 11*x^2 - 6*x", 'x', 5));
    CHECK_THROWS_AS(associated_sequence(series_parse("t^2", 't', 5), 0, 5),
                    std::invalid_argument);
}

TEST_CASE("duality of the associated sequence") {
    const int N = 6;
    for (const char* lam : {"0", "1", "1/2"}) {
        const Rational L = rat_parse(lam);
        for (const char* ftext : {"t", "t + t^2", "exp(t)-1"}) {
            Series f = series_parse(ftext, 't', N);
            PseudoBasis S = associated_sequence(f, L, N);
            PseudoBasis Tf = tau_basis(f, L, N);
            PseudoBasis Tt = tau_basis(series_monomial('t', N, 1), L, N);
            PseudoBasis q = e_lambda_basis(L, N);
            for (int n = 0; n < N; ++n) {
                // the functional tau_n(f) in u-coordinates
                auto a = basis_expand(Tf.row(n), Tt);
                BaxterElement u(L, N);
                for (int m = 0; m < N; ++m) u[m] = a[static_cast<std::size_t>(m)];
                for (int k = 0; k < N; ++k)
                    CHECK(pair_lambda(u, S.row(k), q) == ((n == k) ? 1 : 0));
            }
        }
    }
}

TEST_CASE("functional action") {
    const int N = 10;
    PseudoBasis M = monomials(N);
    for (int n = 1; n < N; ++n)
        CHECK(u_action(1, M.row(n), M, 0) == series_monomial('x', N, n - 1, n));
    for (const char* lam : {"0", "1", "1/2"}) {
        const Rational L = rat_parse(lam);
        PseudoBasis q = e_lambda_basis(L, N);
        Series p = series_parse("x^3 - 2*x", 'x', N);
        CHECK(u_action(0, p, q, L) == p);
        for (int n = 1; n < N; ++n) {
            Series want = series_add(series_scale(n, q.row(n - 1)),
                                     series_scale(Rational(n) * L, q.row(n)));
            CHECK(u_action(1, q.row(n), q, L) == want);
        }
        // u_j (u_k p) agrees with the action of the product u_j u_k
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Series lhs = u_action(j, u_action(k, p, q, L), q, L);
                BaxterElement w =
                    baxter_product(baxter_unit(L, N, j), baxter_unit(L, N, k));
                Series rhs('x', N);
                for (int i = 0; i < N; ++i)
                    if (w[i] != 0)
                        rhs = series_add(rhs, series_scale(w[i], u_action(i, p, q, L)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("coproduct tables") {
    auto c = coproduct_matrix(0, 1, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                  ((a == 0 && b == 0) ? 1 : 0));
    c = coproduct_matrix(1, 0, 4);
    CHECK(c[1][0] == 1);
    CHECK(c[0][1] == 1);
    CHECK(c[1][1] == 0);
    c = coproduct_matrix(1, 1, 4);
    CHECK(c[1][0] == 1);
    CHECK(c[0][1] == 1);
    CHECK(c[1][1] == 1);
    for (const char* lam : {"0", "1", "1/2"}) {
        const Rational L = rat_parse(lam);
        const int N = 8;
        PseudoBasis q = e_lambda_basis(L, N);
        for (int n = 0; n < N; ++n) {
            auto table = coproduct_matrix(n, L, N);
            // symmetry, counit, and agreement with the shifted row
            BiSeries rhs(N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    CHECK(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                          table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
                    const Rational& w =
                        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (w != 0)
                        rhs = bi_add(rhs, bi_scale(w, bi_mul(bi_from_x(q.row(a)),
                                                             bi_from_y(q.row(b)))));
                }
            for (int a = 0; a < N; ++a) {
                CHECK(table[static_cast<std::size_t>(a)][0] == ((a == n) ? 1 : 0));
            }
            CHECK(substitute_sum(q.row(n)) == rhs);
        }
    }
}

TEST_CASE("formal shift") {
    BiSeries s = shift_bivariate(series_monomial('x', 4, 1));
    CHECK(s.at(1, 0) == 1);
    CHECK(s.at(0, 1) == 1);
    CHECK(s.at(0, 0) == 0);
    BiSeries k = shift_bivariate(series_constant('x', 4, 7));
    CHECK(k.at(0, 0) == 7);
    CHECK(k.at(1, 0) == 0);
    CHECK(k.at(0, 1) == 0);
}

TEST_CASE("matrix inverse") {
    std::vector<std::vector<Rational>> m = {{1, 2}, {3, 4}};
    auto inv = matrix_inverse(m);
    CHECK(inv[0][0] == -2);
    CHECK(inv[0][1] == 1);
    CHECK(inv[1][0] == Rational(3, 2));
    CHECK(inv[1][1] == Rational(-1, 2));
    std::vector<std::vector<Rational>> sing = {{1, 2}, {2, 4}};
    CHECK_THROWS_AS(matrix_inverse(sing), std::invalid_argument);
}

TEST_CASE("rendering") {
    PseudoBasis M = monomials(2);
    CHECK(pseudobasis_str(M) == "p0 = 1\np1 = x\n");
    CHECK(pseudobasis_json(M) ==
          "{\"var\": \"x\", \"order\": 2, \"rows\": [[\"1\", \"0\"], [\"0\", \"1\"]]}");
}
