#ifndef PERSIST_RATIONAL_HPP
#define PERSIST_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace persist {

// Exact rational scalar used throughout the toolkit.
using Rational = mpq_class;

// Builds a canonical rational from a numerator/denominator pair.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

// Renders as "p" or "p/q" with the sign on the numerator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace persist

#endif
