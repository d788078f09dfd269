#include "mzvkit/rational.hpp"

namespace mzv {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational");
    try {
        Rational r(text);
        if (r.get_den() == 0) throw parse_error("zero denominator in \"" + text + "\"");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational \"" + text + "\"");
    }
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
    Integer num = r.get_num();
    const Integer den = r.get_den();
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    Integer whole = num / den;
    Integer rem = num % den;
    std::string out = sign + whole.get_str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        Integer d = rem / den;
        rem %= den;
        out += d.get_str();
    }
    return out;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational rational_abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

} // namespace mzv
