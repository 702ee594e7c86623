#pragma once

#include <optional>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

inline constexpr long kDefaultBisectionCap = 4096;

// Real algebraic number field F = Q(alpha), alpha the unique real root of the
// monic polynomial min_poly inside [lo, hi]. degree 1 encodes Q itself.
struct FieldSpec {
    std::vector<Rat> min_poly; // constant term first, monic, size degree+1
    Rat lo, hi;                // isolating interval for alpha (ignored when degree 1)

    int degree() const { return static_cast<int>(min_poly.size()) - 1; }
};

// Coordinates in the power basis 1, alpha, ..., alpha^(d-1).
struct FieldElement {
    std::vector<Rat> c;

    bool is_zero() const {
        for (const auto& q : c)
            if (sgn(q) != 0) return false;
        return true;
    }
    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

// Arithmetic context for one field. All operations are pure; elements are
// plain coefficient vectors and carry no back-pointer to the field.
class Field {
public:
    explicit Field(FieldSpec spec, long bisection_cap = kDefaultBisectionCap);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return spec_.degree(); }
    long bisection_cap() const { return cap_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rat(const Rat& q) const;
    FieldElement gen() const; // alpha (requires degree >= 2)

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul_rat(const Rat& c, const FieldElement& a) const;
    // Multiplicative inverse via the extended Euclidean algorithm on
    // polynomials. Throws DivisionByZero on 0 and ReducibleField when a
    // nontrivial factor of min_poly is discovered.
    FieldElement inv(const FieldElement& a) const;

    // Certified sign: 0 iff all coefficients vanish, otherwise +-1 decided by
    // refining the isolating interval until the value interval excludes zero.
    int sign(const FieldElement& a) const;
    // Rational enclosure of the real value, width <= eps.
    QInterval enclose(const FieldElement& a, const Rat& eps) const;

    bool eq(const FieldElement& a, const FieldElement& b) const { return a.c == b.c; }
    int cmp(const FieldElement& a, const FieldElement& b) const { return sign(sub(a, b)); }
    bool is_rational(const FieldElement& a) const;
    // The rational value when is_rational(a); undefined otherwise.
    Rat rat_value(const FieldElement& a) const { return a.c.at(0); }

private:
    FieldSpec spec_;
    long cap_;

    void refine(QInterval& iv, int& sign_lo, long& steps) const;
};

// Row rank over F of a matrix given as a list of rows.
size_t field_rank(const Field& f, const std::vector<std::vector<FieldElement>>& rows);

// Indices of `want` rows forming an invertible `want` x cols submatrix
// (requires cols >= the pivot structure, rows picked greedily in order).
std::optional<std::vector<size_t>>
field_independent_rows(const Field& f, const std::vector<std::vector<FieldElement>>& rows, size_t want);

// Solve M x = b for square invertible M over F.
std::vector<FieldElement> field_solve(const Field& f, std::vector<std::vector<FieldElement>> m,
                                      std::vector<FieldElement> b);

// Inverse of a square invertible matrix over F.
std::vector<std::vector<FieldElement>>
field_inverse(const Field& f, const std::vector<std::vector<FieldElement>>& m);

} // namespace riesz
