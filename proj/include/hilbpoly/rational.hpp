#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hilbpoly {

// All arithmetic in this library is exact. Integers and rationals are
// GMP-backed; mpq_class keeps values canonical (reduced, positive
// denominator, zero as 0/1), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Serialized form: "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Parses "p/q" or "p". Inverse of to_string; input need not be reduced.
inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse rational: \"" + s + "\"");
    }
}

}  // namespace hilbpoly
