#pragma once

#include "momoa/rational.hpp"

namespace momoa {

/// Closed halfspace {y : w·y >= alpha}. Every supporting halfspace of the upper
/// image has w >= 0 componentwise because the recession cone is the nonnegative
/// orthant, so w >= 0, w != 0 is an invariant here.
struct Halfspace {
    std::vector<Rational> w;
    Rational alpha;

    /// w·y - alpha.
    Rational eval(const ObjPoint& y) const;

    bool satisfied_by(const ObjPoint& y) const;
    bool tight_at(const ObjPoint& y) const;

    /// Rescale so the coefficients (w..., alpha) are coprime integers.
    void canonicalize();

    bool operator==(const Halfspace&) const = default;
};

Halfspace canonical(Halfspace h);

/// Divide (w, alpha) by sum(w); used to deduplicate cuts within a sweep.
Halfspace normalized_by_weight_sum(const Halfspace& h);

bool lex_less(const Halfspace& a, const Halfspace& b);

struct HalfspaceLexLess {
    bool operator()(const Halfspace& a, const Halfspace& b) const { return lex_less(a, b); }
};

std::string halfspace_str(const Halfspace& h);

} // namespace momoa
