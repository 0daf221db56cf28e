#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace grat {

// Arbitrary-precision rational scalar in canonical form (reduced, positive
// denominator).  mpq_class maintains exactly that invariant.
using ExactRational = mpq_class;
using ExactInteger = mpz_class;

inline ExactInteger binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Fibonacci with the F_0 = F_1 = 1 indexing.
inline ExactInteger fibonacci(long n) {
    if (n < 0) throw std::domain_error("fibonacci: negative index");
    mpz_class r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    return r;
}

inline ExactRational rational_pow(const ExactRational& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0)
        throw std::domain_error("rational_pow: zero base, negative exponent");
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
    ExactRational r(num, den);
    r.canonicalize();
    if (e < 0) return 1 / r;
    return r;
}

// Accepts "p/q", integers, and plain decimal strings ("1.5" -> 3/2).
inline ExactRational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            ExactRational r(s);
            r.canonicalize();
            return r;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rational: bad literal");
        ExactInteger num(digits);
        ExactInteger den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        ExactRational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

inline std::string to_string(const ExactRational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace grat
