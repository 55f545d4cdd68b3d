#include "lumbral/verify.hpp"

#include <exception>
#include <sstream>

namespace lumbral {

namespace {

// splitmix64: fully specified, so random draws are byte-stable everywhere.
std::uint64_t next_u64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int draw_small(std::uint64_t& state) {
    return static_cast<int>(next_u64(state) % 19) - 9;  // uniform in -9..9
}

VerifyReport make_pass(std::string name,
                       std::vector<std::pair<std::string, std::string>> params) {
    VerifyReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.pass = true;
    return r;
}

VerifyReport make_fail(std::string name,
                       std::vector<std::pair<std::string, std::string>> params,
                       std::vector<long long> indices, std::string lhs, std::string rhs,
                       std::string note = {}) {
    VerifyReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.pass = false;
    r.has_counterexample = true;
    r.indices = std::move(indices);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.note = std::move(note);
    return r;
}

VerifyReport make_error(std::string name,
                        std::vector<std::pair<std::string, std::string>> params,
                        const std::string& what) {
    VerifyReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.pass = false;
    r.note = "error: " + what;
    return r;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// First index where the two elements differ, or -1 if equal.
int first_mismatch(const BaxterElement& a, const BaxterElement& b) {
    for (int k = 0; k < a.order; ++k)
        if (a[k] != b[k]) return k;
    return -1;
}

int first_mismatch(const Series& a, const Series& b) {
    for (int k = 0; k < a.order; ++k)
        if (a[k] != b[k]) return k;
    return -1;
}

// First (i, j) with i + j < order where the two tables differ.
bool first_mismatch(const BiSeries& a, const BiSeries& b, int limit, int& mi, int& mj) {
    for (int i = 0; i < limit; ++i)
        for (int j = 0; i + j < limit; ++j)
            if (a.at(i, j) != b.at(i, j)) {
                mi = i;
                mj = j;
                return true;
            }
    return false;
}

// The two assembled double sums of the binomial expansion. `swapped`
// exchanges which factor lives in x and which in y.
BiSeries binomial_rhs(const PseudoBasis& B, const Rational& lambda, int n, bool swapped) {
    BiSeries rhs(B.order);
    for (int i = 0; i <= n; ++i) {
        const Integer cni = binomial(n, i);
        Rational lk = 1;
        for (int k = 0; k <= i; ++k) {
            const Rational w = Rational(cni * binomial(i, k)) * lk;
            lk *= lambda;
            if (w == 0) continue;
            const Series& px = swapped ? B.row(i) : B.row(n + k - i);
            const Series& py = swapped ? B.row(n + k - i) : B.row(i);
            rhs = bi_add(rhs, bi_scale(w, bi_mul(bi_from_x(px), bi_from_y(py))));
        }
    }
    return rhs;
}

// One side of the four-index binomial identity, as a function of w.
Rational eqinv_side(EqinvSide side, long long n, long long k, long long i, long long w,
                    bool perturb) {
    Integer acc = 0;
    for (long long s = 0; s <= w; ++s) {
        if (side == EqinvSide::Left)
            acc += binomial_ext(k, s) * binomial_ext(n - k + s, i) * binomial_ext(i, w - s);
        else
            acc += binomial_ext(k, w - s) * binomial_ext(n + s - i, s) *
                   binomial_ext(n - k, i - s);
    }
    if (perturb) acc += 1;
    return Rational(acc);
}

}  // namespace

std::string report_json(const VerifyReport& r) {
    std::ostringstream os;
    os << "{\"name\": \"" << json_escape(r.name) << "\", \"params\": {";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << json_escape(r.params[i].first) << "\": \""
           << json_escape(r.params[i].second) << "\"";
    }
    os << "}, \"status\": \"" << (r.pass ? "pass" : "fail") << "\", \"counterexample\": ";
    if (r.has_counterexample) {
        os << "{\"indices\": [";
        for (std::size_t i = 0; i < r.indices.size(); ++i) {
            if (i) os << ", ";
            os << r.indices[i];
        }
        os << "], \"lhs\": \"" << json_escape(r.lhs) << "\", \"rhs\": \"" << json_escape(r.rhs)
           << "\"}";
    } else {
        os << "null";
    }
    if (!r.note.empty()) os << ", \"note\": \"" << json_escape(r.note) << "\"";
    os << "}";
    return os.str();
}

std::string report_text(const VerifyReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    if (r.has_counterexample) {
        os << "\n  counterexample at (";
        for (std::size_t i = 0; i < r.indices.size(); ++i) {
            if (i) os << ", ";
            os << r.indices[i];
        }
        os << "): lhs = " << r.lhs << ", rhs = " << r.rhs;
    }
    if (!r.note.empty()) os << "\n  note: " << r.note;
    return os.str();
}

std::uint64_t rng_init(std::uint64_t seed) { return seed ^ 0x8f2c9d4b1a6e3057ULL; }

BaxterElement random_element(const Rational& lambda, int order, int support,
                             std::uint64_t& state) {
    BaxterElement e(lambda, order);
    const int top = support < order ? support : order;
    for (int k = 0; k < top; ++k) e[k] = draw_small(state);
    return e;
}

VerifyReport verify_baxter_axiom(const Rational& lambda, int order, int trials,
                                 std::uint64_t seed, int shift) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)},
        {"order", std::to_string(order)},
        {"trials", std::to_string(trials)},
        {"shift", std::to_string(shift)}};
    const std::string name = "baxter-axiom";
    try {
        std::uint64_t state = rng_init(seed);
        for (int t = 0; t < trials; ++t) {
            BaxterElement a = random_element(lambda, order, order, state);
            BaxterElement b = random_element(lambda, order, order, state);
            BaxterElement lhs = baxter_product(baxter_shift(a, shift), baxter_shift(b, shift));
            BaxterElement rhs = baxter_add(
                baxter_add(baxter_shift(baxter_product(a, baxter_shift(b, shift)), shift),
                           baxter_shift(baxter_product(b, baxter_shift(a, shift)), shift)),
                baxter_scale(lambda, baxter_shift(baxter_product(a, b), shift)));
            const int m = first_mismatch(lhs, rhs);
            if (m >= 0)
                return make_fail(name, params, {t, m}, rat_str(lhs[m]), rat_str(rhs[m]));
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_algebra_laws(const Rational& lambda, int order, int trials,
                                 std::uint64_t seed) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)},
        {"order", std::to_string(order)},
        {"trials", std::to_string(trials)}};
    const std::string name = "algebra-laws";
    try {
        std::uint64_t state = rng_init(seed);
        const BaxterElement one = baxter_unit(lambda, order, 0);
        for (int t = 0; t < trials; ++t) {
            BaxterElement a = random_element(lambda, order, order, state);
            BaxterElement b = random_element(lambda, order, order, state);
            BaxterElement c = random_element(lambda, order, order, state);
            int m = first_mismatch(baxter_product(a, b), baxter_product(b, a));
            if (m >= 0)
                return make_fail(name, params, {t, 0, m}, rat_str(baxter_product(a, b)[m]),
                                 rat_str(baxter_product(b, a)[m]), "commutativity");
            BaxterElement l = baxter_product(baxter_product(a, b), c);
            BaxterElement r = baxter_product(a, baxter_product(b, c));
            m = first_mismatch(l, r);
            if (m >= 0)
                return make_fail(name, params, {t, 1, m}, rat_str(l[m]), rat_str(r[m]),
                                 "associativity");
            m = first_mismatch(baxter_product(one, a), a);
            if (m >= 0)
                return make_fail(name, params, {t, 2, m}, rat_str(baxter_product(one, a)[m]),
                                 rat_str(a[m]), "identity");
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_divided_power(const PseudoBasis& B, const Rational& lambda) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)}, {"order", std::to_string(B.order)}};
    const std::string name = "divided-power";
    try {
        const int N = B.order;
        for (int m = 0; m < N; ++m)
            for (int n = 0; m + n < N; ++n) {
                Series lhs = series_mul(B.row(m), B.row(n));
                Series rhs(B.var, N);
                Rational lk = 1;
                const int kmax = m < n ? m : n;
                for (int k = 0; k <= kmax; ++k) {
                    const Rational w = Rational(binomial(m + n - k, n) * binomial(n, k)) * lk;
                    rhs = series_add(rhs, series_scale(w, B.row(m + n - k)));
                    lk *= lambda;
                }
                const int d = first_mismatch(lhs, rhs);
                if (d >= 0)
                    return make_fail(name, params, {m, n, d}, rat_str(lhs[d]), rat_str(rhs[d]));
            }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_lambda_binomial(const PseudoBasis& B, const Rational& lambda) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)}, {"order", std::to_string(B.order)}};
    const std::string name = "binomial";
    try {
        const int N = B.order;
        for (int n = 0; n < N; ++n) {
            BiSeries lhs = substitute_sum(B.row(n));
            BiSeries rhs = binomial_rhs(B, lambda, n, false);
            int mi = 0, mj = 0;
            if (first_mismatch(lhs, rhs, N, mi, mj))
                return make_fail(name, params, {n, mi, mj}, rat_str(lhs.at(mi, mj)),
                                 rat_str(rhs.at(mi, mj)));
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_binomial_symmetry(const PseudoBasis& B, const Rational& lambda) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)}, {"order", std::to_string(B.order)}};
    const std::string name = "symmetry";
    try {
        const int N = B.order;
        for (int n = 0; n < N; ++n) {
            BiSeries a = binomial_rhs(B, lambda, n, false);
            BiSeries b = binomial_rhs(B, lambda, n, true);
            int mi = 0, mj = 0;
            if (first_mismatch(a, b, N, mi, mj))
                return make_fail(name, params, {n, mi, mj}, rat_str(a.at(mi, mj)),
                                 rat_str(b.at(mi, mj)));
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_pairing_product(const PseudoBasis& B, const Rational& lambda, int trials,
                                    std::uint64_t seed) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)},
        {"order", std::to_string(B.order)},
        {"trials", std::to_string(trials)}};
    const std::string name = "pairing-product";
    try {
        const int N = B.order;
        const int half = N / 2;  // functional supports < N/2 keep products exact below N
        const PseudoBasis q = e_lambda_basis(lambda, N, B.var);
        auto check_pair = [&](const BaxterElement& u, const BaxterElement& v, long long tag,
                              VerifyReport& out) {
            const BaxterElement uv = baxter_product(u, v);
            for (int n = 0; n < half; ++n) {
                const Rational lhs = pair_lambda(uv, B.row(n), q);
                Rational rhs = 0;
                for (int i = 0; i <= n; ++i) {
                    const Integer cni = binomial(n, i);
                    Rational lk = 1;
                    for (int k = 0; k <= i; ++k) {
                        const Rational w = Rational(cni * binomial(i, k)) * lk;
                        lk *= lambda;
                        if (w == 0) continue;
                        rhs += w * pair_lambda(u, B.row(n + k - i), q) *
                               pair_lambda(v, B.row(i), q);
                    }
                }
                if (lhs != rhs) {
                    out = make_fail(name, params, {tag, n}, rat_str(lhs), rat_str(rhs));
                    return false;
                }
            }
            return true;
        };
        VerifyReport bad;
        long long tag = 0;
        for (int m = 0; m < half; ++m)
            for (int n = 0; n < half; ++n, ++tag) {
                if (!check_pair(baxter_unit(lambda, N, m), baxter_unit(lambda, N, n), tag, bad))
                    return bad;
            }
        std::uint64_t state = rng_init(seed);
        for (int t = 0; t < trials; ++t, ++tag) {
            BaxterElement u = random_element(lambda, N, half, state);
            BaxterElement v = random_element(lambda, N, half, state);
            if (!check_pair(u, v, tag, bad)) return bad;
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_shift_invariance(const Rational& lambda, int order) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)}, {"order", std::to_string(order)}};
    const std::string name = "shift-invariance";
    try {
        const int N = order;
        const PseudoBasis qN = e_lambda_basis(lambda, N);
        for (int k = 0; k < N; ++k) {
            // act-after-shift runs at order N + k: the action lowers the
            // x-degree by up to k, so truncation noise stays at total
            // degree >= N and the window below N is exact
            const int M = N + k;
            const PseudoBasis qM = e_lambda_basis(lambda, M);
            for (int n = 0; n < N; ++n) {
                BiSeries shifted_then_act = substitute_sum(qM.row(n));
                for (int j = 0; j < M; ++j) {
                    Series col('x', M);
                    for (int i = 0; i + j < M; ++i) col[i] = shifted_then_act.at(i, j);
                    col = u_action(k, col, qM, lambda);
                    for (int i = 0; i + j < M; ++i) shifted_then_act.at(i, j) = col[i];
                }
                BiSeries act_then_shift = substitute_sum(u_action(k, qN.row(n), qN, lambda));
                for (int i = 0; i < N; ++i)
                    for (int j = 0; i + j < N; ++j)
                        if (act_then_shift.at(i, j) != shifted_then_act.at(i, j))
                            return make_fail(name, params, {k, n, i, j},
                                             rat_str(shifted_then_act.at(i, j)),
                                             rat_str(act_then_shift.at(i, j)));
            }
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport check_identity_eqinv(int max_n, int max_k, int max_i, int max_w) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"max_n", std::to_string(max_n)},
        {"max_k", std::to_string(max_k)},
        {"max_i", std::to_string(max_i)},
        {"max_w", std::to_string(max_w)}};
    const std::string name = "eqinv";
    for (long long n = 0; n <= max_n; ++n)
        for (long long k = 0; k <= max_k; ++k)
            for (long long i = 0; i <= max_i; ++i)
                for (long long w = 0; w <= max_w; ++w) {
                    const Rational lhs = eqinv_side(EqinvSide::Left, n, k, i, w, false);
                    const Rational rhs = eqinv_side(EqinvSide::Right, n, k, i, w, false);
                    if (lhs != rhs)
                        return make_fail(name, params, {n, k, i, w}, rat_str(lhs), rat_str(rhs));
                }
    return make_pass(name, params);
}

VerifyReport check_zeilberger_recurrence(EqinvSide side, int max_n, int max_k, int max_i,
                                         int max_w, bool perturb) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"side", side == EqinvSide::Left ? "left" : "right"},
        {"max_n", std::to_string(max_n)},
        {"max_k", std::to_string(max_k)},
        {"max_i", std::to_string(max_i)},
        {"max_w", std::to_string(max_w)},
        {"perturb", perturb ? "true" : "false"}};
    const std::string name = "zeilberger";
    auto apply = [&](EqinvSide sd, long long n, long long k, long long i, long long w) {
        const Rational c0 = Rational((k + i - w) * (k - n + i - w - 1));
        const Rational c1 = Rational(k * k - k * n + k * i - 3 * k * w - n * i + 2 * n * w +
                                     i * i - 3 * i * w + 2 * w * w - 4 * k + 2 * n - 4 * i +
                                     5 * w + 3);
        const Rational c2 = Rational(-(w + 2) * (k - n + i - w - 2));
        return c0 * eqinv_side(sd, n, k, i, w, perturb) +
               c1 * eqinv_side(sd, n, k, i, w + 1, perturb) +
               c2 * eqinv_side(sd, n, k, i, w + 2, perturb);
    };
    for (long long n = 0; n <= max_n; ++n)
        for (long long k = 0; k <= max_k; ++k)
            for (long long i = 0; i <= max_i; ++i)
                for (long long w = 0; w <= max_w; ++w) {
                    const Rational v = apply(side, n, k, i, w);
                    if (v != 0) {
                        std::string note;
                        // if the recurrence misses both sides at w = 0 the
                        // transcription of the operator itself is suspect
                        if (w == 0 && !perturb) {
                            const EqinvSide other =
                                side == EqinvSide::Left ? EqinvSide::Right : EqinvSide::Left;
                            if (apply(other, n, k, i, 0) != 0)
                                note = "possible typo in the printed recurrence: both sides "
                                       "fail at w = 0";
                        }
                        return make_fail(name, params, {n, k, i, w}, rat_str(v), "0",
                                         std::move(note));
                    }
                }
    return make_pass(name, params);
}

VerifyReport verify_compatibility(const Rational& lambda, int order) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"lambda", rat_str(lambda)}, {"order", std::to_string(order)}};
    const std::string name = "compatibility";
    try {
        const Series t = series_monomial('t', order, 1);
        const PseudoBasis tau = tau_basis(t, lambda, order);
        const PseudoBasis q = e_lambda_basis(lambda, order);
        for (int n = 0; n < order; ++n)
            for (int k = 0; k < order; ++k) {
                const Rational v = pair_classical(tau.row(n), q.row(k));
                const Rational expect = (n == k) ? 1 : 0;
                if (v != expect)
                    return make_fail(name, params, {n, k}, rat_str(v), rat_str(expect));
            }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

VerifyReport verify_theorem_ucl(const Series& f, const Rational& lambda, int order,
                                std::uint64_t seed) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"f", series_str(f)}, {"lambda", rat_str(lambda)}, {"order", std::to_string(order)}};
    const std::string name = "ucl";
    try {
        const int N = order;
        const PseudoBasis S = associated_sequence(f, lambda, N);

        VerifyReport sub = verify_lambda_binomial(S, lambda);
        if (!sub.pass) {
            sub.name = name;
            sub.params = params;
            sub.note = "associated sequence is not lambda-binomial" +
                       (sub.note.empty() ? "" : "; " + sub.note);
            return sub;
        }
        sub = verify_pairing_product(S, lambda, 10, seed);
        if (!sub.pass) {
            sub.name = name;
            sub.params = params;
            sub.note = "pairing product rule fails on the associated sequence" +
                       (sub.note.empty() ? "" : "; " + sub.note);
            return sub;
        }
        const PseudoBasis dualT = tau_basis(f, lambda, N);
        sub = verify_divided_power(dualT, lambda);
        if (!sub.pass) {
            sub.name = name;
            sub.params = params;
            sub.note = "dual rows fail the divided-power table" +
                       (sub.note.empty() ? "" : "; " + sub.note);
            return sub;
        }

        // reconstruct the dual rows {f_n} of S independently: expand s_k in
        // the reference basis, invert-transpose, read rows in {tau_m(t)}
        const PseudoBasis q = e_lambda_basis(lambda, N);
        const Series t = series_monomial(f.var, N, 1);
        const PseudoBasis tauT = tau_basis(t, lambda, N);
        std::vector<std::vector<Rational>> C;
        C.reserve(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) C.push_back(basis_expand(S.row(k), q));
        const std::vector<std::vector<Rational>> Cinv = matrix_inverse(std::move(C));
        // f_n = sum_m (C^{-1})[m][n] tau_m(t)
        std::vector<Series> fn;
        fn.reserve(static_cast<std::size_t>(N));
        for (int n = 0; n < N; ++n) {
            Series s(f.var, N);
            for (int m = 0; m < N; ++m) {
                const Rational& c = Cinv[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
                if (c != 0) s = series_add(s, series_scale(c, tauT.row(m)));
            }
            fn.push_back(std::move(s));
        }
        // roundtrip: f_1 must be f itself, and f_n = tau_n(f_1)
        int d = first_mismatch(fn[1], f);
        if (d >= 0)
            return make_fail(name, params, {1, d}, rat_str(fn[1][d]), rat_str(f[d]),
                             "reconstructed f_1 differs from f");
        const PseudoBasis tauF1 = tau_basis(fn[1], lambda, N);
        for (int n = 0; n < N; ++n) {
            d = first_mismatch(fn[static_cast<std::size_t>(n)], tauF1.row(n));
            if (d >= 0)
                return make_fail(name, params, {n, d},
                                 rat_str(fn[static_cast<std::size_t>(n)][d]),
                                 rat_str(tauF1.row(n)[d]), "dual row is not tau_n(f_1)");
        }
        return make_pass(name, params);
    } catch (const std::exception& ex) {
        return make_error(name, params, ex.what());
    }
}

}  // namespace lumbral
