#include "lumbral/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lumbral {

Integer binomial(long m, long k) {
    if (m < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    Integer r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (m - k + j);
        r /= j;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

Integer binomial_ext(long m, long k) {
    if (k < 0) return 0;
    if (m >= 0) return binomial(m, k);
    // C(m,k) = (-1)^k C(k-m-1, k) for m < 0
    Integer r = binomial(k - m - 1, k);
    return (k % 2 == 0) ? r : -r;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r = 1;
    for (long j = 2; j <= n; ++j) r *= j;
    return r;
}

Rational rat_pow(const Rational& base, long e) {
    if (e < 0) throw std::domain_error("rat_pow: negative exponent");
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational rat_parse(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = n;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) throw bad();
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') neg = (text[i] == '-'), ++i;
    auto digits = [&](Integer& out) {
        if (i == end || !std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
        out = 0;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i])))
            out = out * 10 + (text[i++] - '0');
    };
    Integer num, den = 1;
    digits(num);
    if (i < end && text[i] == '/') {
        ++i;
        digits(den);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    if (i != end) throw bad();
    Rational r(num, den);
    return neg ? -r : r;
}

std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace lumbral
