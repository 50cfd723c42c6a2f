#pragma once

// Exact scalars used everywhere in braidchow.  Backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidchow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an exact division that must be remainder-free is not.
struct divisibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed serialized input.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "num/den" form, always with an explicit denominator.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "a/b" or a bare integer "a".  Rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw parse_error("empty integer in rational '" + std::string(text) + "'");
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size())
            throw parse_error("bad integer in rational '" + std::string(text) + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw parse_error("bad integer in rational '" + std::string(text) + "'");
        std::string digits(s.front() == '+' ? s.substr(1) : s);
        return Integer(digits);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace braidchow
