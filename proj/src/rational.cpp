#include "momoa/rational.hpp"

#include "momoa/errors.hpp"

#include <sstream>

namespace momoa {

Rational rational_from_double(double x) {
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

std::string rat_str(const Rational& x) {
    return x.get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw ValidationError("not a rational: '" + text + "'");
    if (sgn(Rational(r.get_den())) <= 0)
        throw ValidationError("nonpositive denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size())
        throw InternalError("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

bool lex_less(const ObjPoint& a, const ObjPoint& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

ObjPoint point_from_ints(const std::vector<long long>& v) {
    ObjPoint y;
    y.reserve(v.size());
    for (long long x : v)
        y.push_back(rat(x));
    return y;
}

std::string point_str(const ObjPoint& y) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i)
            out << ", ";
        out << rat_str(y[i]);
    }
    out << ')';
    return out.str();
}

} // namespace momoa
