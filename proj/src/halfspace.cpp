#include "momoa/halfspace.hpp"

#include "momoa/errors.hpp"

#include <sstream>

namespace momoa {

Rational Halfspace::eval(const ObjPoint& y) const {
    return dot(w, y) - alpha;
}

bool Halfspace::satisfied_by(const ObjPoint& y) const {
    return sgn(eval(y)) >= 0;
}

bool Halfspace::tight_at(const ObjPoint& y) const {
    return sgn(eval(y)) == 0;
}

void Halfspace::canonicalize() {
    if (w.empty())
        throw InternalError("halfspace with empty normal");
    // Clear denominators, then divide out the gcd of all numerators.
    Integer scale = alpha.get_den();
    for (const Rational& c : w)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    Integer g = 0;
    auto fold = [&](const Rational& c) {
        Integer v = c.get_num() * (scale / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return v;
    };
    std::vector<Integer> nums;
    nums.reserve(w.size());
    for (const Rational& c : w)
        nums.push_back(fold(c));
    const Integer a = fold(alpha);
    if (sgn(g) == 0)
        throw InternalError("halfspace normal is zero");
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = Rational(nums[i] / g);
    alpha = Rational(a / g);
}

Halfspace canonical(Halfspace h) {
    h.canonicalize();
    return h;
}

Halfspace normalized_by_weight_sum(const Halfspace& h) {
    Rational s = 0;
    for (const Rational& c : h.w)
        s += c;
    if (sgn(s) <= 0)
        throw InternalError("halfspace weight sum not positive");
    Halfspace out = h;
    for (Rational& c : out.w)
        c /= s;
    out.alpha /= s;
    return out;
}

bool lex_less(const Halfspace& a, const Halfspace& b) {
    if (a.w != b.w)
        return lex_less(a.w, b.w);
    return a.alpha < b.alpha;
}

std::string halfspace_str(const Halfspace& h) {
    std::ostringstream out;
    for (const Rational& c : h.w)
        out << rat_str(c) << ' ';
    out << ">= " << rat_str(h.alpha);
    return out.str();
}

} // namespace momoa
