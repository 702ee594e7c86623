#include "riesz/triple.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::FinitelyGenerated: return "finitely_generated";
    case Mode::Divisible: return "divisible";
    case Mode::VectorSpace: return "vector_space";
    }
    return "?";
}

Mode mode_from_name(const std::string& s) {
    if (s == "finitely_generated") return Mode::FinitelyGenerated;
    if (s == "divisible") return Mode::Divisible;
    if (s == "vector_space") return Mode::VectorSpace;
    fail(Errc::ParseError, "unknown mode: '" + s + "'");
}

bool FaceLattice::is_member(uint32_t s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

uint32_t FaceLattice::strict_of(uint32_t s) const {
    auto it = strict_.find(s);
    if (it == strict_.end()) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    return it->second;
}

uint32_t FaceLattice::nonneg_of(uint32_t s) const { return strict_of(s) | (full() & ~s); }

uint32_t FaceLattice::min_member_containing(uint32_t support) const {
    uint32_t inter = full();
    for (uint32_t m : members)
        if ((support & ~m) == 0) inter &= m;
    return inter;
}

std::vector<int> mask_to_indices(uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (mask & (uint32_t{1} << i)) idx.push_back(i + 1);
    return idx;
}

uint32_t indices_to_mask(const std::vector<int>& idx, int n) {
    uint32_t m = 0;
    for (int i : idx) {
        if (i < 1 || i > n) fail(Errc::ParseError, "index out of range: " + std::to_string(i));
        m |= uint32_t{1} << (i - 1);
    }
    return m;
}

std::string mask_str(uint32_t mask) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : mask_to_indices(mask)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

GroupElement element_from_coeffs(const CharTriple& t, std::vector<Rat> coeffs) {
    if (t.mode == Mode::VectorSpace)
        fail(Errc::ParseError, "vector_space elements are coordinate vectors");
    if (coeffs.size() != t.gen_count())
        fail(Errc::ParseError, "coefficient vector length mismatch");
    if (t.mode == Mode::FinitelyGenerated)
        for (const auto& q : coeffs)
            if (q.get_den() != 1)
                fail(Errc::ParseError, "finitely_generated elements need integer coefficients");
    GroupElement g;
    g.coords.assign(t.n, t.field.zero());
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        for (int i = 0; i < t.n; ++i)
            g.coords[i] = t.field.add(g.coords[i], t.field.mul_rat(coeffs[j], t.generators[j][i]));
    }
    g.coeffs = std::move(coeffs);
    return g;
}

GroupElement element_from_coords(const CharTriple& t, std::vector<FieldElement> coords) {
    if (t.mode != Mode::VectorSpace)
        fail(Errc::ParseError, "coordinate elements require vector_space mode");
    if (static_cast<int>(coords.size()) != t.n)
        fail(Errc::ParseError, "coordinate vector length mismatch");
    GroupElement g;
    g.coords = std::move(coords);
    return g;
}

GroupElement element_zero(const CharTriple& t) {
    if (t.mode == Mode::VectorSpace)
        return element_from_coords(t, std::vector<FieldElement>(t.n, t.field.zero()));
    return element_from_coeffs(t, std::vector<Rat>(t.gen_count(), Rat(0)));
}

GroupElement gadd(const CharTriple& t, const GroupElement& a, const GroupElement& b) {
    GroupElement r;
    r.coeffs.resize(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) r.coeffs[j] = a.coeffs[j] + b.coeffs[j];
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = t.field.add(a.coords[i], b.coords[i]);
    return r;
}

GroupElement gsub(const CharTriple& t, const GroupElement& a, const GroupElement& b) {
    GroupElement r;
    r.coeffs.resize(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) r.coeffs[j] = a.coeffs[j] - b.coeffs[j];
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = t.field.sub(a.coords[i], b.coords[i]);
    return r;
}

GroupElement gneg(const CharTriple& t, const GroupElement& a) {
    GroupElement r;
    r.coeffs.resize(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) r.coeffs[j] = -a.coeffs[j];
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = t.field.neg(a.coords[i]);
    return r;
}

GroupElement gscale(const CharTriple& t, const Rat& c, const GroupElement& a) {
    GroupElement r;
    r.coeffs.resize(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) r.coeffs[j] = c * a.coeffs[j];
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = t.field.mul_rat(c, a.coords[i]);
    return r;
}

bool gequal(const GroupElement& a, const GroupElement& b) {
    return a.coeffs == b.coeffs && a.coords == b.coords;
}

uint32_t support_mask(const CharTriple& t, const GroupElement& g) {
    uint32_t m = 0;
    for (int i = 0; i < t.n; ++i)
        if (!g.coords[i].is_zero()) m |= uint32_t{1} << i;
    return m;
}

namespace {

// Coefficient lattice of {g : g_i = 0 for all i outside s}; shared by ideal()
// and the spanning check inside validate().
IntMatrix ideal_lattice(const CharTriple& t, uint32_t s) {
    if (t.mode == Mode::VectorSpace) {
        auto idx = mask_to_indices(s);
        IntMatrix l(idx.size(), t.n);
        for (size_t r = 0; r < idx.size(); ++r) l.at(r, idx[r] - 1) = 1;
        return l;
    }
    int d = t.field.degree();
    std::vector<int> outside = mask_to_indices(t.faces.full() & ~s);
    RatMatrix constraints(outside.size() * d, t.gen_count());
    for (size_t oi = 0; oi < outside.size(); ++oi) {
        int i = outside[oi] - 1;
        for (int k = 0; k < d; ++k)
            for (size_t j = 0; j < t.gen_count(); ++j)
                constraints.at(oi * d + k, j) = t.generators[j][i].c[k];
    }
    return kernel_int(constraints);
}

std::vector<std::vector<FieldElement>> lattice_ambient(const CharTriple& t, const IntMatrix& l) {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(l.rows);
    for (size_t r = 0; r < l.rows; ++r) {
        std::vector<FieldElement> v(t.n, t.field.zero());
        if (t.mode == Mode::VectorSpace) {
            for (int i = 0; i < t.n; ++i)
                if (l.at(r, i) != 0) v[i] = t.field.from_rat(Rat(l.at(r, i)));
        } else {
            for (size_t j = 0; j < t.gen_count(); ++j) {
                if (l.at(r, j) == 0) continue;
                for (int i = 0; i < t.n; ++i)
                    v[i] = t.field.add(v[i], t.field.mul_rat(Rat(l.at(r, j)), t.generators[j][i]));
            }
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

WellFormedReport validate(const CharTriple& t) {
    WellFormedReport rep;
    auto violate = [&](const std::string& rule, const std::string& detail) {
        rep.valid = false;
        rep.violations.push_back({rule, detail});
    };

    if (t.n < 1 || t.n > 30) {
        violate("dimension", "n must be in 1..30");
        return rep;
    }
    const auto& fl = t.faces;
    if (fl.n != t.n) violate("dimension", "face lattice dimension differs from n");
    if (!fl.is_member(0)) violate("empty-member", "the empty set is not a member");
    if (!fl.is_member(fl.full())) violate("full-member", "the full set {1..n} is not a member");
    for (size_t i = 0; i < fl.members.size(); ++i) {
        for (size_t j = i + 1; j < fl.members.size(); ++j) {
            uint32_t a = fl.members[i], b = fl.members[j];
            if (!fl.is_member(a | b)) {
                violate("union-closed", "union of " + mask_str(a) + " and " + mask_str(b) +
                                            " is missing");
                goto closure_done;
            }
            if (!fl.is_member(a & b)) {
                violate("intersection-closed", "intersection of " + mask_str(a) + " and " +
                                                   mask_str(b) + " is missing");
                goto closure_done;
            }
        }
    }
closure_done:
    for (uint32_t s : fl.members) {
        auto it = fl.strict_.find(s);
        if (it == fl.strict_.end()) {
            violate("strict-missing", "no strict set recorded for member " + mask_str(s));
            continue;
        }
        if ((it->second & ~s) != 0)
            violate("strict-subset", "strict set of " + mask_str(s) + " is not a subset");
        if (s != 0 && it->second == 0)
            violate("strict-nonempty", "strict set of nonempty member " + mask_str(s) +
                                           " is empty");
    }

    if (t.mode != Mode::VectorSpace) {
        int d = t.field.degree();
        for (const auto& g : t.generators) {
            if (static_cast<int>(g.size()) != t.n) {
                violate("generator-shape", "generator length differs from n");
                return rep;
            }
            for (const auto& e : g)
                if (static_cast<int>(e.c.size()) != d) {
                    violate("generator-shape", "field element coefficient count differs from degree");
                    return rep;
                }
        }
        if (!rep.valid) return rep; // spanning needs a structurally sound lattice
        for (uint32_t s : fl.members) {
            if (s == 0) continue;
            IntMatrix l = ideal_lattice(t, s);
            auto ambient = lattice_ambient(t, l);
            // restrict to the coordinates of s; the rest vanish by construction
            auto idx = mask_to_indices(s);
            std::vector<std::vector<FieldElement>> restricted;
            restricted.reserve(ambient.size());
            for (const auto& v : ambient) {
                std::vector<FieldElement> r;
                r.reserve(idx.size());
                for (int i : idx) r.push_back(v[i - 1]);
                restricted.push_back(std::move(r));
            }
            if (field_rank(t.field, restricted) != idx.size())
                violate("spanning", "ideal of " + mask_str(s) +
                                        " does not span its coordinate subspace");
        }
    }
    return rep;
}

IdealData ideal(const CharTriple& t, uint32_t s) {
    if (!t.faces.is_member(s)) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    IdealData data;
    data.S = s;
    data.coeff_lattice = ideal_lattice(t, s);
    data.ambient_basis = lattice_ambient(t, data.coeff_lattice);
    return data;
}

bool is_positive(const CharTriple& t, const GroupElement& g) {
    std::vector<int> signs(t.n, 0);
    uint32_t supp = 0;
    for (int i = 0; i < t.n; ++i) {
        signs[i] = t.field.sign(g.coords[i]);
        if (signs[i] != 0) supp |= uint32_t{1} << i;
    }
    for (uint32_t s : t.faces.members) {
        if ((supp & ~s) != 0) continue;
        uint32_t strict = t.faces.strict_of(s);
        bool ok = true;
        for (int i : mask_to_indices(strict))
            if (signs[i - 1] != 1) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

bool leq(const CharTriple& t, const GroupElement& g, const GroupElement& h) {
    return is_positive(t, gsub(t, h, g));
}

bool is_order_unit(const CharTriple& t, const GroupElement& g, uint32_t s) {
    if (!t.faces.is_member(s)) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    if ((support_mask(t, g) & ~s) != 0) return false;
    for (int i : mask_to_indices(t.faces.strict_of(s)))
        if (t.field.sign(g.coords[i - 1]) != 1) return false;
    return true;
}

std::vector<std::pair<uint32_t, uint32_t>> covering_pairs(const CharTriple& t) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    const auto& mem = t.faces.members;
    for (uint32_t s1 : mem) {
        for (uint32_t s2 : mem) {
            if (s1 == s2 || (s1 & ~s2) != 0) continue;
            bool covered = true;
            for (uint32_t m : mem)
                if (m != s1 && m != s2 && (s1 & ~m) == 0 && (m & ~s2) == 0) {
                    covered = false;
                    break;
                }
            if (covered) out.emplace_back(s1, s2);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DegeneracyData degeneracy(const CharTriple& t, uint32_t s) {
    if (!t.faces.is_member(s)) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    DegeneracyData d;
    d.S = s;
    d.D = s;
    uint32_t inter = t.faces.full();
    bool has_superset = false;
    for (uint32_t m : t.faces.members) {
        if (m == s || (s & ~m) != 0) continue;
        d.D |= t.faces.strict_of(m);
        inter &= m;
        has_superset = true;
    }
    d.rank = t.n - std::popcount(d.D);
    d.proper_intersection = has_superset && inter == s;
    return d;
}

uint32_t min_superideal(const CharTriple& t, uint32_t s) {
    if (!t.faces.is_member(s)) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    if (s == t.faces.full())
        fail(Errc::ProperIntersection, "the full member has no proper superideal");
    uint32_t inter = t.faces.full();
    for (uint32_t m : t.faces.members) {
        if (m == s || (s & ~m) != 0) continue;
        inter &= m;
    }
    if (inter == s)
        fail(Errc::ProperIntersection,
             mask_str(s) + " is the proper intersection of two members");
    return inter;
}

} // namespace riesz
