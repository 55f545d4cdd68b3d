#ifndef LUMBRAL_VERIFY_HPP
#define LUMBRAL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lumbral/umbral.hpp"

namespace lumbral {

/// Outcome of one identity check. A failing report always carries a
/// counterexample with the exact values of both sides.
struct VerifyReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    bool has_counterexample = false;
    std::vector<long long> indices;
    std::string lhs, rhs;
    std::string note;
};

std::string report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

/// Deterministic element with coefficients drawn uniformly from -9..9.
/// `support` bounds the highest populated index (exclusive); pass N for
/// full support. Byte-stable across platforms for a fixed seed.
BaxterElement random_element(const Rational& lambda, int order, int support, std::uint64_t& state);

/// Seeds the generator state from a user-facing seed value.
std::uint64_t rng_init(std::uint64_t seed);

/// P(a)P(b) = P(a P(b)) + P(b P(a)) + lambda P(ab) on random pairs, with
/// P = shift by `shift`. shift = 1 is the Baxter operator; shift = 2 is a
/// negative control that must fail.
VerifyReport verify_baxter_axiom(const Rational& lambda, int order, int trials,
                                 std::uint64_t seed, int shift = 1);

/// Commutativity, associativity and the u_0 identity on random triples.
VerifyReport verify_algebra_laws(const Rational& lambda, int order, int trials,
                                 std::uint64_t seed);

/// v_m v_n = sum_k C(m+n-k, n) C(n, k) lambda^k v_{m+n-k} for all m+n < order.
VerifyReport verify_divided_power(const PseudoBasis& B, const Rational& lambda);

/// p_n(x+y) = sum_k lambda^k sum_i C(n,i) C(i,k) p_{n+k-i}(x) p_i(y).
VerifyReport verify_lambda_binomial(const PseudoBasis& B, const Rational& lambda);

/// The two assembled forms of the binomial sum, original and with the
/// roles of the x and y factors exchanged, agree for any triangular B.
VerifyReport verify_binomial_symmetry(const PseudoBasis& B, const Rational& lambda);

/// <u v | p_n> = sum_k lambda^k sum_i C(n,i) C(i,k) <u | p_{n+k-i}> <v | p_i>
/// for exhaustive basis pairs and random functionals with support < order/2.
VerifyReport verify_pairing_product(const PseudoBasis& B, const Rational& lambda,
                                    int trials, std::uint64_t seed);

/// E^y (u_k q_n) = u_k (E^y q_n) compared at total degree < order; the
/// act-after-shift side runs at internal order order + k so the comparison
/// window is exact.
VerifyReport verify_shift_invariance(const Rational& lambda, int order);

/// sum_{s=0}^w C(k,s) C(n-k+s,i) C(i,w-s) =
/// sum_{s=0}^w C(k,w-s) C(n+s-i,s) C(n-k,i-s), brute force over the box,
/// with upper indices extended polynomially to negative values.
VerifyReport check_identity_eqinv(int max_n, int max_k, int max_i, int max_w);

enum class EqinvSide { Left, Right };

/// The printed second-order recurrence in w annihilates the chosen side of
/// the identity above. `perturb` adds 1 to the summand as a negative
/// control. If a tuple fails at w = 0 on both sides, the report is
/// annotated: that indicates a transcription problem in the recurrence
/// rather than in the identity.
VerifyReport check_zeilberger_recurrence(EqinvSide side, int max_n, int max_k, int max_i,
                                         int max_w, bool perturb = false);

/// [tau_n(t) | e_lambda^k]_0 = delta_{n,k} for all n, k < order.
VerifyReport verify_compatibility(const Rational& lambda, int order);

/// The associated sequence of f is lambda-binomial, satisfies the pairing
/// product rule, its dual satisfies the divided-power table, and the dual
/// rows reconstruct f: f_1 = f and f_n = tau_n(f_1).
VerifyReport verify_theorem_ucl(const Series& f, const Rational& lambda, int order,
                                std::uint64_t seed);

}  // namespace lumbral

#endif
