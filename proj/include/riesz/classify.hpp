#pragma once

#include <optional>

#include "riesz/triple.hpp"

namespace riesz {

// Sorted (member, nonneg-set) bitmask pairs, minimal over all coordinate
// permutations.
using CanonEncoding = std::vector<std::pair<uint32_t, uint32_t>>;

struct CatalogEntry {
    int n = 0;
    CanonEncoding canon;
    unsigned long orbit = 0; // distinct raw pairs in the permutation class
};

// All classes of face data admissible for an interpolation vector space of
// dimension n, canonicalized and sorted. n <= 4.
std::vector<CatalogEntry> enumerate_Dn(int n);

CanonEncoding canon_form(const FaceLattice& faces); // n <= 8
bool equivalent_vs(const FaceLattice& d1, const FaceLattice& d2);

// Rebuild the vector_space-mode triple described by a catalog encoding.
CharTriple triple_from_encoding(int n, const CanonEncoding& enc);

enum class EquivVerdict { Yes, No, Unknown };

struct EquivWitness {
    std::vector<int> sigma;                          // 1-based images
    std::vector<std::vector<FieldElement>> phi;      // n x n over the field of t1
    std::optional<IntMatrix> u;                      // generator change of basis
};

struct EquivResult {
    EquivVerdict verdict = EquivVerdict::Unknown;
    std::optional<EquivWitness> witness;
    std::string note;
};

// Permutation layer plus a bounded linear search for the lifting isomorphism.
// "yes" answers carry a fully verified witness; "no" is decided from
// permutation-invariant data alone; "unknown" means the budget ran out.
EquivResult equivalent_triple(const CharTriple& t1, const CharTriple& t2, long budget);

} // namespace riesz
