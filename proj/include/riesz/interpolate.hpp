#pragma once

#include <map>
#include <optional>

#include "riesz/triple.hpp"

namespace riesz {

inline constexpr long long kDefaultSearchBudget = 10'000'000;

struct InterpolationTrace {
    uint32_t t11 = 0, t12 = 0, t21 = 0, t22 = 0;
    uint32_t r = 0, rhat = 0;
    GroupElement g1, g2, c, m;
    int retries = 0;
};

struct InterpolationResult {
    GroupElement z;
    InterpolationTrace trace;
};

// Smallest member of the face lattice containing the support of y - x.
uint32_t min_enclosing_member(const CharTriple& t, const GroupElement& x, const GroupElement& y);

// An element of I_s whose coordinate at each i in coords lies strictly inside
// boxes.at(i) (certified by exact sign), and vanishes outside s. boxes maps
// 1-based coordinates to open rational intervals.
GroupElement dense_approx(const CharTriple& t, uint32_t s, uint32_t coords,
                          const std::map<int, QInterval>& boxes,
                          long long budget = kDefaultSearchBudget);

// Constructive interpolant for a1, a2 <= b1, b2 on a triple whose conditions
// all hold. Verifies the four order relations before returning.
InterpolationResult interpolant(const CharTriple& t, const GroupElement& a1,
                                const GroupElement& a2, const GroupElement& b1,
                                const GroupElement& b2,
                                long long budget = kDefaultSearchBudget);

// Exhaustive search over integer coefficient vectors in [-bound, bound]^m;
// first hit in lexicographic order. Absent means no interpolant with small
// coefficients, not nonexistence.
std::optional<GroupElement> oracle_search(const CharTriple& t, const GroupElement& a1,
                                          const GroupElement& a2, const GroupElement& b1,
                                          const GroupElement& b2, long bound);

} // namespace riesz
