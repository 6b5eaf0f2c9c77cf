#include "spermat/bigint.hpp"

#include <stdexcept>

namespace spermat {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;  // exact at every step: r is C(n,i) after the division
    }
    return r;
}

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string decimal_string(const BigRat& value, int places) {
    if (places < 0) throw std::invalid_argument("negative precision");
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);  // cpp_rational keeps den > 0
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scaled = num * ipow(10, places);
    BigInt q = scaled / den;
    BigInt r = scaled % den;
    // round half to even
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) == 1)) ++q;

    std::string digits = q.str();
    std::string out;
    if (places == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, places + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - places) + "." +
              digits.substr(digits.size() - places);
    }
    if (negative && q != 0) out.insert(0, 1, '-');
    return out;
}

}  // namespace spermat
