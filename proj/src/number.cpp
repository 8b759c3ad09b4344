// SPDX-License-Identifier: Apache-2.0
#include "ulrich/number.hpp"

#include <cctype>
#include <stdexcept>

namespace ulrich {

Int floor_div(const Int& n, const Int& d) {
    if (d <= 0) throw std::logic_error("floor_div: divisor must be positive");
    Int q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return q;
}

Int ceil_div(const Int& n, const Int& d) {
    if (d <= 0) throw std::logic_error("ceil_div: divisor must be positive");
    Int q = n / d;
    if (q * d != n && n > 0) q += 1;
    return q;
}

Int exact_div(const Int& n, const Int& d, const char* what) {
    if (d == 0) throw std::logic_error(std::string("exact_div by zero in ") + what);
    if (n % d != 0) {
        throw std::logic_error(std::string("non-exact division in ") + what + ": " +
                               n.str() + " / " + d.str());
    }
    return n / d;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rational& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool parse_int(const std::string& text, Int& out) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) return false;
    Int value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        value = value * 10 + (text[i] - '0');
    }
    out = negative ? Int(-value) : value;
    return true;
}

}  // namespace ulrich
