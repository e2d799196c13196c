#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace momoa {

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Every comparison the geometry makes is decided with zero tolerance.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point y in objective space (length = number of objectives p).
using ObjPoint = std::vector<Rational>;

/// Nonnegative, not-all-zero objective weights.
using Weight = std::vector<Rational>;

/// mpq_class(n, d) does not reduce; this does.
inline Rational rat(long long num, long long den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// gmpxx has no long long overloads; long is 64-bit on every target here.
inline Integer make_int(long long v) {
    return Integer(static_cast<long>(v));
}

/// Exact conversion (doubles are dyadic rationals).
Rational rational_from_double(double x);

inline double to_double(const Rational& x) { return x.get_d(); }

/// "num" when integral, "num/den" otherwise.
std::string rat_str(const Rational& x);

/// Accepts the same two spellings rat_str emits.
Rational parse_rational(const std::string& text);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

bool lex_less(const ObjPoint& a, const ObjPoint& b);

struct LexLess {
    bool operator()(const ObjPoint& a, const ObjPoint& b) const { return lex_less(a, b); }
};

ObjPoint point_from_ints(const std::vector<long long>& v);

std::string point_str(const ObjPoint& y);

} // namespace momoa
