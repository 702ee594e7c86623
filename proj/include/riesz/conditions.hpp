#pragma once

#include <optional>
#include <string>

#include "riesz/triple.hpp"

namespace riesz {

struct PairWitness {
    uint32_t s1 = 0, s2 = 0;
    std::string detail;
};

struct Verdict {
    bool checked = false;
    bool pass = true;
    std::optional<PairWitness> witness;
};

struct ConditionReport {
    Mode mode = Mode::FinitelyGenerated;
    Verdict c1, c2, c3, c4;
    bool overall = true;
};

// Theorem conditions on a validated triple. Witnesses report the first
// failing pair in lexicographic (mask) order.
Verdict check_i(const CharTriple& t);
Verdict check_ii(const CharTriple& t);
Verdict check_iii(const CharTriple& t);
Verdict check_iv(const CharTriple& t);

// Is the projection of I_S onto the given coordinates dense in R^l?
// Kronecker dual-annihilator criterion in finitely_generated mode.
bool is_dense_projection(const CharTriple& t, uint32_t s, uint32_t coords);

// Covering pair (s1, s2): is I_{s2}/I_{s1} cyclic?
bool is_cyclic_quotient(const CharTriple& t, uint32_t s1, uint32_t s2);

// Mode-aware aggregation: vector_space checks (i)-(ii), divisible (i)-(iii),
// finitely_generated (i)-(iv).
ConditionReport check_all(const CharTriple& t);

} // namespace riesz
