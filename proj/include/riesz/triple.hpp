#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "riesz/scalars.hpp"
#include "riesz/zlinalg.hpp"

namespace riesz {

enum class Mode { FinitelyGenerated, Divisible, VectorSpace };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// Sublattice of 2^{1..n} with a strict index set attached to each member.
// Subsets are bitmasks; bit i-1 stands for coordinate i.
struct FaceLattice {
    int n = 0;
    std::vector<uint32_t> members;        // sorted ascending
    std::map<uint32_t, uint32_t> strict_; // member -> strict index set

    uint32_t full() const { return (n >= 32) ? 0 : ((uint32_t{1} << n) - 1); }
    bool is_member(uint32_t s) const;
    uint32_t strict_of(uint32_t s) const; // indices forced strictly positive
    uint32_t nonneg_of(uint32_t s) const; // strict_of(s) | complement of s

    // smallest member containing the given support (exists: members are
    // intersection-closed and contain the full set)
    uint32_t min_member_containing(uint32_t support) const;
};

struct CharTriple {
    Field field;
    int n = 0;
    Mode mode = Mode::FinitelyGenerated;
    std::vector<std::vector<FieldElement>> generators; // m vectors in F^n; empty in vector_space mode
    FaceLattice faces;

    size_t gen_count() const { return generators.size(); }
};

// Elements are coefficient vectors over the generator list; coordinates are
// the derived vectors in F^n. vector_space mode carries coordinates only.
struct GroupElement {
    std::vector<Rat> coeffs;
    std::vector<FieldElement> coords;
};

GroupElement element_from_coeffs(const CharTriple& t, std::vector<Rat> coeffs);
GroupElement element_from_coords(const CharTriple& t, std::vector<FieldElement> coords);
GroupElement element_zero(const CharTriple& t);
GroupElement gadd(const CharTriple& t, const GroupElement& a, const GroupElement& b);
GroupElement gsub(const CharTriple& t, const GroupElement& a, const GroupElement& b);
GroupElement gneg(const CharTriple& t, const GroupElement& a);
GroupElement gscale(const CharTriple& t, const Rat& c, const GroupElement& a);
bool gequal(const GroupElement& a, const GroupElement& b);
uint32_t support_mask(const CharTriple& t, const GroupElement& g);

struct IdealData {
    uint32_t S = 0;
    IntMatrix coeff_lattice; // rows: integer coefficient vectors generating I_S
    std::vector<std::vector<FieldElement>> ambient_basis; // the same rows in F^n
};

struct DegeneracyData {
    uint32_t S = 0;
    uint32_t D = 0;
    int rank = 0;
    bool proper_intersection = false;
};

struct Violation {
    std::string rule;
    std::string detail;
};

struct WellFormedReport {
    bool valid = true;
    std::vector<Violation> violations;
};

WellFormedReport validate(const CharTriple& t);

IdealData ideal(const CharTriple& t, uint32_t s);
bool is_positive(const CharTriple& t, const GroupElement& g);
bool leq(const CharTriple& t, const GroupElement& g, const GroupElement& h);
bool is_order_unit(const CharTriple& t, const GroupElement& g, uint32_t s);
std::vector<std::pair<uint32_t, uint32_t>> covering_pairs(const CharTriple& t);
DegeneracyData degeneracy(const CharTriple& t, uint32_t s);
uint32_t min_superideal(const CharTriple& t, uint32_t s);

// Formatting helpers for masks (1-based index lists).
std::vector<int> mask_to_indices(uint32_t mask);
uint32_t indices_to_mask(const std::vector<int>& idx, int n);
std::string mask_str(uint32_t mask);

} // namespace riesz
