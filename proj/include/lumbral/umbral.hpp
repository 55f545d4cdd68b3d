#ifndef LUMBRAL_UMBRAL_HPP
#define LUMBRAL_UMBRAL_HPP

#include <string>
#include <vector>

#include "lumbral/baxter.hpp"
#include "lumbral/series.hpp"

namespace lumbral {

/// A sequence p_0, p_1, ... of truncated series with deg p_n = n, stored
/// as rows. The coefficient matrix is lower triangular with nonzero
/// diagonal, which makes expansion of any series in the rows exact.
struct PseudoBasis {
    char var = 'x';
    int order = 0;
    std::vector<Series> rows;

    PseudoBasis() = default;
    PseudoBasis(char v, int n) : var(v), order(n) {}

    const Series& row(int n) const { return rows[static_cast<std::size_t>(n)]; }

    bool operator==(const PseudoBasis&) const = default;
};

/// e_lambda(x) = (e^{lambda x} - 1)/lambda = sum_{k>=1} lambda^{k-1} x^k / k!.
/// At lambda = 0 this is x.
Series e_lambda(const Rational& lambda, int order, char var = 'x');

/// Rows q_n = e_lambda(x)^n; the reference basis for the weight-lambda pairing.
PseudoBasis e_lambda_basis(const Rational& lambda, int order, char var = 'x');

/// Rows tau_n(f) = f(f - lambda)(f - 2 lambda)...(f - (n-1) lambda)/n!,
/// built by the running product tau_{n+1} = tau_n (f - n lambda)/(n+1).
/// Requires f delta (f(0) = 0, f'(0) != 0).
PseudoBasis tau_basis(const Series& f, const Rational& lambda, int order);

/// Coefficients c with p = sum_n c_n * B.row(n); exact by elimination from
/// the top degree down. Throws if some diagonal entry vanishes.
std::vector<Rational> basis_expand(const Series& p, const PseudoBasis& B);

/// <u | p> with respect to q: expand p in q, then sum u.coeffs[n] * c_n.
Rational pair_lambda(const BaxterElement& u, const Series& p, const PseudoBasis& q);

/// [f | p]_0 = sum_k k! f_k p_k. Equals the untruncated pairing whenever
/// the t-side is a polynomial of degree < order, which holds for every
/// tau-basis row.
Rational pair_classical(const Series& f, const Series& p);

/// The sequence {s_k} dual to {tau_n(f)} under the weight-lambda pairing:
/// expand tau_n(f) in {tau_m(t)} to get the matrix A, then apply
/// (A^{-1})^T to the rows of e_lambda_basis.
PseudoBasis associated_sequence(const Series& f, const Rational& lambda, int order);

/// The functional u_k acting on p relative to the basis q:
/// u_k q_n = sum_{i=0}^k lambda^i C(n,k) C(k,i) q_{n-k+i}, extended linearly.
Series u_action(int k, const Series& p, const PseudoBasis& q, const Rational& lambda);

/// Coproduct coefficients for q_n: table c[a][b] with
/// Delta(q_n) = sum_{a,b} c[a][b] q_a (x) q_b, where
/// c[a][b] = lambda^{a+b-n} C(n,b) C(b,a+b-n) when 0 <= a+b-n <= b.
std::vector<std::vector<Rational>> coproduct_matrix(int n, const Rational& lambda, int order);

/// The formal shift E^y: p(x) |-> p(x + y).
BiSeries shift_bivariate(const Series& p);

/// Exact inverse by Gauss-Jordan elimination; throws on singular input.
std::vector<std::vector<Rational>> matrix_inverse(std::vector<std::vector<Rational>> a);

std::string pseudobasis_str(const PseudoBasis& B);
std::string pseudobasis_json(const PseudoBasis& B);

}  // namespace lumbral

#endif
