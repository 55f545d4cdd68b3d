#include "lumbral/baxter.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lumbral {

namespace {

void require_compatible(const BaxterElement& a, const BaxterElement& b) {
    if (a.weight != b.weight)
        throw std::invalid_argument("weight mismatch: " + rat_str(a.weight) + " vs " +
                                    rat_str(b.weight));
    if (a.order != b.order)
        throw std::invalid_argument("order mismatch: " + std::to_string(a.order) + " vs " +
                                    std::to_string(b.order));
}

}  // namespace

BaxterElement baxter_unit(const Rational& lambda, int order, int n, const Rational& c) {
    BaxterElement e(lambda, order);
    if (n >= 0 && n < order) e[n] = c;
    return e;
}

BaxterElement baxter_add(const BaxterElement& a, const BaxterElement& b) {
    require_compatible(a, b);
    BaxterElement r = a;
    for (int k = 0; k < r.order; ++k) r[k] += b[k];
    return r;
}

BaxterElement baxter_sub(const BaxterElement& a, const BaxterElement& b) {
    require_compatible(a, b);
    BaxterElement r = a;
    for (int k = 0; k < r.order; ++k) r[k] -= b[k];
    return r;
}

BaxterElement baxter_scale(const Rational& c, const BaxterElement& a) {
    BaxterElement r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

BaxterElement baxter_product(const BaxterElement& a, const BaxterElement& b) {
    require_compatible(a, b);
    const int N = a.order;
    BaxterElement r(a.weight, N);
    for (int m = 0; m < N; ++m) {
        if (a[m] == 0) continue;
        for (int n = 0; n < N; ++n) {
            if (b[n] == 0) continue;
            const Rational ab = a[m] * b[n];
            // upper limit min(m, n): C(n, k) kills k > n
            const int kmax = m < n ? m : n;
            Rational lk = 1;
            for (int k = 0; k <= kmax; ++k) {
                const int idx = m + n - k;
                if (idx < N)
                    r[idx] += ab * Rational(binomial(idx, n) * binomial(n, k)) * lk;
                lk *= a.weight;
            }
        }
    }
    return r;
}

BaxterElement baxter_operator_P(const BaxterElement& a) { return baxter_shift(a, 1); }

BaxterElement baxter_shift(const BaxterElement& a, int shift) {
    if (shift < 0) throw std::domain_error("baxter_shift: negative shift");
    BaxterElement r(a.weight, a.order);
    for (int n = 0; n + shift < a.order; ++n) r[n + shift] = a[n];
    return r;
}

BaxterElement baxter_parse(const std::string& text, const Rational& lambda, int order) {
    BaxterElement r(lambda, order);
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        return std::invalid_argument("bad Baxter element '" + text + "': " + what);
    };
    skip_ws();
    bool first = true;
    while (i < n) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        Rational coeff = 1;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            coeff = rat_parse(text.substr(start, i - start));
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (i >= n || text[i] != 'u') throw fail("expected 'u<index>'");
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw fail("expected index after 'u'");
        int idx = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            idx = idx * 10 + (text[i++] - '0');
        if (idx >= order)
            throw fail("index " + std::to_string(idx) + " exceeds order " + std::to_string(order));
        r[idx] += Rational(sign) * coeff;
        skip_ws();
        first = false;
    }
    if (first) throw fail("empty input");
    return r;
}

std::string baxter_str(const BaxterElement& a) {
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
        if (mag != 1) os << rat_str(mag) << "*";
        os << "u" << k;
    }
    if (first) os << "0";
    return os.str();
}

std::string baxter_json(const BaxterElement& a) {
    std::ostringstream os;
    os << "{\"lambda\": \"" << rat_str(a.weight) << "\", \"order\": " << a.order
       << ", \"coeffs\": [";
    for (int k = 0; k < a.order; ++k) {
        if (k) os << ", ";
        os << "\"" << rat_str(a[k]) << "\"";
    }
    os << "]}";
    return os.str();
}

}  // namespace lumbral
