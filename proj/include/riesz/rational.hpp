#pragma once

#include <gmpxx.h>

#include <string>

#include "riesz/errors.hpp"

namespace riesz {

using Int = mpz_class;
using Rat = mpq_class;

// "p/q" with q omitted when 1; always lowest terms, positive denominator.
std::string format_rat(const Rat& q);
Rat parse_rat(const std::string& s);

inline int sgn(const Rat& q) { return sgn(q.get_num()) ; }

// Closed rational interval. Endpoints are exact; arithmetic is outward-exact
// (no rounding happens at all, intervals only track dependency loss).
struct QInterval {
    Rat lo, hi;

    QInterval() = default;
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static QInterval point(const Rat& q) { return {q, q}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& q) const { return lo <= q && q <= hi; }
    bool inside(const QInterval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
};

QInterval iadd(const QInterval& a, const QInterval& b);
QInterval isub(const QInterval& a, const QInterval& b);
QInterval imul(const QInterval& a, const QInterval& b);
QInterval ineg(const QInterval& a);
QInterval iscale(const Rat& c, const QInterval& a);

} // namespace riesz
