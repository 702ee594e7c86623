#pragma once

#include <optional>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(size_t n);
    std::vector<Int> row(size_t i) const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct RatMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct HnfResult {
    IntMatrix h; // row-style HNF, pivots positive, entries above reduced, zero rows last
    IntMatrix u; // unimodular, h = u * a
};

HnfResult hnf(const IntMatrix& m);

// Canonical lattice basis: nonzero rows of the HNF.
IntMatrix hnf_basis(const IntMatrix& m);

// Basis of the full (saturated) integer kernel {x : m x = 0}, one row each.
IntMatrix kernel_int(const RatMatrix& m);

// Coefficients c with c * lattice == target, when target lies in the row
// lattice. Verified by exact multiplication before returning.
std::optional<std::vector<Int>> member_with_witness(const IntMatrix& lattice,
                                                    const std::vector<Int>& target);

// Rational solution c of c * lattice == target, when one exists.
std::optional<std::vector<Rat>> member_rat(const IntMatrix& lattice, const std::vector<Rat>& target);

// rows(l1) + rows(l2) generate the same lattice as rows(l3)?
bool lattice_sum_eq(const IntMatrix& l1, const IntMatrix& l2, const IntMatrix& l3);

size_t rank_rat(const RatMatrix& m);

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

// target = c * m for a row coefficient vector c.
std::vector<Int> left_mul(const std::vector<Int>& c, const IntMatrix& m);
std::vector<Rat> left_mul_rat(const std::vector<Rat>& c, const IntMatrix& m);

} // namespace riesz
