#ifndef LUMBRAL_BAXTER_HPP
#define LUMBRAL_BAXTER_HPP

#include <string>
#include <vector>

#include "lumbral/rational.hpp"

namespace lumbral {

/// Element of the free Baxter algebra of weight lambda on the base ring,
/// truncated at index `order`: coeffs[n] multiplies the basis element u_n.
///
/// The span of {u_n : n >= order} is an ideal (the lowest index occurring
/// in u_m u_n is max(m, n)), so truncation is an algebra quotient and
/// every stored coefficient is exact.
struct BaxterElement {
    Rational weight;
    int order = 0;
    std::vector<Rational> coeffs;

    BaxterElement() = default;
    BaxterElement(Rational lambda, int n)
        : weight(std::move(lambda)), order(n), coeffs(static_cast<std::size_t>(n)) {}

    const Rational& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

    bool operator==(const BaxterElement&) const = default;
};

/// The basis element u_n.
BaxterElement baxter_unit(const Rational& lambda, int order, int n, const Rational& c = 1);

BaxterElement baxter_add(const BaxterElement& a, const BaxterElement& b);
BaxterElement baxter_sub(const BaxterElement& a, const BaxterElement& b);
BaxterElement baxter_scale(const Rational& c, const BaxterElement& a);

/// Bilinear extension of
///   u_m u_n = sum_{k=0}^{min(m,n)} C(m+n-k, n) C(n, k) lambda^k u_{m+n-k},
/// truncated at the common order. u_0 is the identity.
BaxterElement baxter_product(const BaxterElement& a, const BaxterElement& b);

/// The Baxter operator P: u_n -> u_{n+1}. The top coefficient is
/// discarded by truncation.
BaxterElement baxter_operator_P(const BaxterElement& a);

/// u_n -> u_{n+shift}; shift=1 is the Baxter operator, other shifts are
/// negative controls for the axiom check.
BaxterElement baxter_shift(const BaxterElement& a, int shift);

/// Parse linear combinations like "u3", "2*u1+u2", "1/2*u1 - u0".
BaxterElement baxter_parse(const std::string& text, const Rational& lambda, int order);

std::string baxter_str(const BaxterElement& a);
std::string baxter_json(const BaxterElement& a);

}  // namespace lumbral

#endif
