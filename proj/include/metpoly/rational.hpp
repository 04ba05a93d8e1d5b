#ifndef METPOLY_RATIONAL_HPP
#define METPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace metpoly {

/// Arbitrary-precision rational. GMP keeps values canonical through arithmetic:
/// gcd(|num|, den) = 1 and den > 0 after every operation. Raw two-argument
/// construction does NOT canonicalize; build fractions via make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p/q" or "p". Throws std::runtime_error on malformed input or zero
/// denominator; the result is canonicalized.
Rational parse_rational(const std::string& s);

/// Format as "p/q", with "/q" omitted when the denominator is 1.
std::string format_rational(const Rational& r);

bool is_integer(const Rational& r);

/// Scale a rational vector to integer entries with overall gcd 1, preserving
/// direction (the multiplier is positive). Returns the primitive vector.
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v);

/// Lexicographic comparison of rational vectors: negative/zero/positive.
int compare_lex(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace metpoly

#endif
