#include "riesz/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "riesz/errors.hpp"

namespace riesz {
namespace {

uint32_t apply_perm(uint32_t mask, const std::vector<int>& perm) {
    uint32_t out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        if (mask & (uint32_t{1} << i)) out |= uint32_t{1} << perm[i];
    return out;
}

CanonEncoding encode(const FaceLattice& fl, const std::vector<int>& perm) {
    CanonEncoding enc;
    enc.reserve(fl.members.size());
    for (uint32_t s : fl.members)
        enc.emplace_back(apply_perm(s, perm), apply_perm(fl.nonneg_of(s), perm));
    std::sort(enc.begin(), enc.end());
    return enc;
}

} // namespace

CanonEncoding canon_form(const FaceLattice& faces) {
    if (faces.n > 8) fail(Errc::TooLarge, "canon_form supports n <= 8");
    std::vector<int> perm(faces.n);
    std::iota(perm.begin(), perm.end(), 0);
    CanonEncoding best = encode(faces, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        CanonEncoding cand = encode(faces, perm);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

bool equivalent_vs(const FaceLattice& d1, const FaceLattice& d2) {
    if (d1.n != d2.n) return false;
    return canon_form(d1) == canon_form(d2);
}

CharTriple triple_from_encoding(int n, const CanonEncoding& enc) {
    FieldSpec spec;
    spec.min_poly = {Rat(0), Rat(1)}; // plain Q; vector_space coordinates only
    FaceLattice fl;
    fl.n = n;
    for (const auto& [member, nonneg] : enc) {
        fl.members.push_back(member);
        fl.strict_[member] = nonneg & member;
    }
    std::sort(fl.members.begin(), fl.members.end());
    return CharTriple{Field(spec), n, Mode::VectorSpace, {}, std::move(fl)};
}

namespace {

// Backtracking assignment of strict sets over one union/intersection-closed
// family, enforcing conditions (i) and (ii) incrementally.
struct StrictAssigner {
    int n;
    std::vector<uint32_t> members; // sorted by popcount then value
    std::map<uint32_t, uint32_t> nonneg;
    uint32_t full;
    std::vector<std::map<uint32_t, uint32_t>> out;

    void assign(size_t k) {
        if (k == members.size()) {
            out.push_back(nonneg); // stores nonneg sets; strict = nonneg & S
            return;
        }
        uint32_t s = members[k];
        if (s == 0) {
            nonneg[0] = full;
            assign(k + 1);
            nonneg.erase(0);
            return;
        }
        // iterate nonempty strict candidates P over submasks of s
        for (uint32_t p = s;; p = (p - 1) & s) {
            if (p != 0 && admissible(s, p, k)) {
                nonneg[s] = p | (full & ~s);
                assign(k + 1);
                nonneg.erase(s);
            }
            if (p == 0) break;
        }
    }

    bool admissible(uint32_t s, uint32_t p, size_t k) const {
        uint32_t png = p | (full & ~s);
        for (size_t a = 0; a < k; ++a) {
            uint32_t s1 = members[a];
            // condition (ii) against assigned proper subsets
            if (s1 != s && (s1 & ~s) == 0 && (p & ~s1) == 0) return false;
            // condition (i) for assigned pairs whose union is s
            for (size_t b = 0; b <= a; ++b) {
                uint32_t s2 = members[b];
                if ((s1 | s2) != s) continue;
                if ((nonneg.at(s1) & nonneg.at(s2)) != png) return false;
            }
            // condition (i) for the pair (s1, s) itself when its union is assigned
            uint32_t un = s1 | s;
            if (un == s && (nonneg.at(s1) & png) != png) return false;
        }
        return true;
    }
};

} // namespace

std::vector<CatalogEntry> enumerate_Dn(int n) {
    if (n < 1) fail(Errc::ParseError, "dimension must be positive");
    if (n > 4) fail(Errc::TooLarge, "enumerate_Dn supports n <= 4");
    uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> middle;
    for (uint32_t s = 1; s < full; ++s) middle.push_back(s);

    std::map<CanonEncoding, unsigned long> classes;
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    for (uint64_t pick = 0; pick < (uint64_t{1} << middle.size()); ++pick) {
        std::vector<uint32_t> members{0, full};
        for (size_t i = 0; i < middle.size(); ++i)
            if (pick & (uint64_t{1} << i)) members.push_back(middle[i]);
        std::sort(members.begin(), members.end());
        bool closed = true;
        for (size_t a = 0; a < members.size() && closed; ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                if (!std::binary_search(members.begin(), members.end(), members[a] | members[b]) ||
                    !std::binary_search(members.begin(), members.end(), members[a] & members[b])) {
                    closed = false;
                    break;
                }
            }
        if (!closed) continue;

        StrictAssigner assigner;
        assigner.n = n;
        assigner.full = full;
        assigner.members = members;
        std::sort(assigner.members.begin(), assigner.members.end(), [](uint32_t a, uint32_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        assigner.assign(0);

        for (const auto& nonneg : assigner.out) {
            FaceLattice fl;
            fl.n = n;
            fl.members = members;
            for (uint32_t s : members) fl.strict_[s] = nonneg.at(s) & s;
            classes.emplace(canon_form(fl), 0).first->second += 1;
        }
    }

    std::vector<CatalogEntry> out;
    out.reserve(classes.size());
    for (const auto& [canon, raw_count] : classes)
        out.push_back(CatalogEntry{n, canon, raw_count});
    return out;
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

bool perm_matches_faces(const FaceLattice& f1, const FaceLattice& f2,
                        const std::vector<int>& perm) {
    if (f1.members.size() != f2.members.size()) return false;
    for (uint32_t s : f1.members) {
        uint32_t img = apply_perm(s, perm);
        if (!f2.is_member(img)) return false;
        if (f2.strict_of(img) != apply_perm(f1.strict_of(s), perm)) return false;
    }
    return true;
}

size_t group_rank(const CharTriple& t) {
    int d = t.field.degree();
    RatMatrix expanded(t.gen_count(), static_cast<size_t>(t.n) * d);
    for (size_t j = 0; j < t.gen_count(); ++j)
        for (int i = 0; i < t.n; ++i)
            for (int k = 0; k < d; ++k)
                expanded.at(j, static_cast<size_t>(i) * d + k) = t.generators[j][i].c[k];
    return rank_rat(expanded);
}

// phi obeys the face shape of (faces, sigma): ideal subspaces map into ideal
// subspaces, and rows of strict indices are nonnegative combinations of the
// matching strict columns.
bool face_compatible(const CharTriple& t, const std::vector<std::vector<FieldElement>>& phi,
                     const FaceLattice& faces, const std::vector<int>& perm) {
    const Field& f = t.field;
    int n = faces.n;
    for (uint32_t s : faces.members) {
        uint32_t img = apply_perm(s, perm);
        for (int j = 0; j < n; ++j) {
            if (!(s & (uint32_t{1} << j))) continue;
            for (int r = 0; r < n; ++r)
                if (!(img & (uint32_t{1} << r)) && !phi[r][j].is_zero()) return false;
        }
        uint32_t strict = faces.strict_of(s);
        for (int i = 0; i < n; ++i) {
            if (!(strict & (uint32_t{1} << i))) continue;
            int row = perm[i];
            bool has_positive = false;
            for (int j = 0; j < n; ++j) {
                uint32_t bit = uint32_t{1} << j;
                if (!(s & bit)) continue;
                if (!(strict & bit)) {
                    if (!phi[row][j].is_zero()) return false;
                } else {
                    int sg = f.sign(phi[row][j]);
                    if (sg < 0) return false;
                    if (sg > 0) has_positive = true;
                }
            }
            if (!has_positive) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::vector<FieldElement>>>
try_field_inverse(const Field& f, const std::vector<std::vector<FieldElement>>& m) {
    try {
        return field_inverse(f, m);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

Int int_det(const IntMatrix& m) {
    // rational elimination; matrices here are tiny
    size_t n = m.rows;
    RatMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.at(i, j) = Rat(m.at(i, j));
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && sgn(a.at(piv, c)) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (sgn(a.at(i, c)) == 0) continue;
            Rat factor = a.at(i, c) / a.at(c, c);
            for (size_t j = c; j < n; ++j) a.at(i, j) -= factor * a.at(c, j);
        }
    }
    return det.get_num(); // integer matrix, so det is integral
}

} // namespace

EquivResult equivalent_triple(const CharTriple& t1, const CharTriple& t2, long budget) {
    if (t1.mode != t2.mode) fail(Errc::ModeMismatch, "triples have different modes");
    if (t1.n != t2.n) fail(Errc::DimensionMismatch, "triples have different dimensions");
    if (t1.n > 8) fail(Errc::TooLarge, "equivalent_triple supports n <= 8");

    std::vector<int> perm(t1.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> sigmas;
    do {
        if (perm_matches_faces(t1.faces, t2.faces, perm)) sigmas.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (sigmas.empty())
        return EquivResult{EquivVerdict::No, std::nullopt, "no face-compatible permutation"};

    auto witness_sigma = [&](const std::vector<int>& p) {
        std::vector<int> s(p.size());
        for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + 1;
        return s;
    };

    if (t1.mode == Mode::VectorSpace) {
        // the permutation matrix itself realizes the isomorphism
        const auto& p = sigmas.front();
        std::vector<std::vector<FieldElement>> phi(t1.n,
                                                   std::vector<FieldElement>(t1.n, t1.field.zero()));
        for (int i = 0; i < t1.n; ++i) phi[p[i]][i] = t1.field.one();
        return EquivResult{EquivVerdict::Yes,
                           EquivWitness{witness_sigma(p), std::move(phi), std::nullopt}, ""};
    }

    if (group_rank(t1) != group_rank(t2))
        return EquivResult{EquivVerdict::No, std::nullopt, "group ranks differ"};
    size_t m = t1.gen_count();
    if (m != t2.gen_count())
        return EquivResult{EquivVerdict::Unknown, std::nullopt,
                           "generator counts differ; bounded search not attempted"};

    const Field& f = t1.field;
    // columns of A1 (the generators of t1) spanning F^n
    std::vector<std::vector<FieldElement>> gen_rows = t1.generators;
    auto pivots = field_independent_rows(f, gen_rows, t1.n);
    if (!pivots)
        return EquivResult{EquivVerdict::No, std::nullopt, "generators of t1 do not span"};
    std::vector<std::vector<FieldElement>> m1(t1.n, std::vector<FieldElement>(t1.n, f.zero()));
    for (int r = 0; r < t1.n; ++r)
        for (int c = 0; c < t1.n; ++c) m1[r][c] = t1.generators[(*pivots)[c]][r];
    auto m1_inv = try_field_inverse(f, m1);
    if (!m1_inv)
        return EquivResult{EquivVerdict::No, std::nullopt, "generators of t1 do not span"};

    long long candidates = 0;
    const long long kCandidateCap = 10'000'000;
    size_t cells = m * m;
    for (const auto& p : sigmas) {
        std::vector<long> u(cells, -budget);
        for (;;) {
            if (++candidates > kCandidateCap)
                return EquivResult{EquivVerdict::Unknown, std::nullopt, "candidate cap reached"};
            IntMatrix um(m, m);
            for (size_t i = 0; i < cells; ++i) um.a[i] = u[i];
            Int det = int_det(um);
            bool det_ok = t1.mode == Mode::FinitelyGenerated ? (det == 1 || det == -1) : det != 0;
            if (det_ok) {
                // b_j = sum_k u_{kj} gen2_k, as columns over F
                std::vector<std::vector<FieldElement>> b(t1.n,
                                                         std::vector<FieldElement>(m, f.zero()));
                for (size_t j = 0; j < m; ++j)
                    for (size_t k = 0; k < m; ++k) {
                        if (um.at(k, j) == 0) continue;
                        for (int r = 0; r < t1.n; ++r)
                            b[r][j] = f.add(b[r][j],
                                            f.mul_rat(Rat(um.at(k, j)), t2.generators[k][r]));
                    }
                // phi = B_J * M1^{-1}
                std::vector<std::vector<FieldElement>> phi(
                    t1.n, std::vector<FieldElement>(t1.n, f.zero()));
                for (int r = 0; r < t1.n; ++r)
                    for (int c = 0; c < t1.n; ++c)
                        for (int k = 0; k < t1.n; ++k)
                            phi[r][c] = f.add(
                                phi[r][c], f.mul(b[r][(*pivots)[k]], (*m1_inv)[k][c]));
                bool consistent = true;
                for (size_t j = 0; j < m && consistent; ++j) {
                    for (int r = 0; r < t1.n && consistent; ++r) {
                        FieldElement acc = f.zero();
                        for (int c = 0; c < t1.n; ++c)
                            acc = f.add(acc, f.mul(phi[r][c], t1.generators[j][c]));
                        if (!f.eq(acc, b[r][j])) consistent = false;
                    }
                }
                if (consistent && face_compatible(t1, phi, t1.faces, p)) {
                    auto phi_inv = try_field_inverse(f, phi);
                    if (phi_inv && face_compatible(t1, *phi_inv, t2.faces, inverse_perm(p)))
                        return EquivResult{EquivVerdict::Yes,
                                           EquivWitness{witness_sigma(p), phi, um}, ""};
                }
            }
            size_t pos = cells;
            while (pos > 0 && u[pos - 1] == budget) u[--pos] = -budget;
            if (pos == 0) break;
            ++u[pos - 1];
        }
    }
    return EquivResult{EquivVerdict::Unknown, std::nullopt, "budget exhausted"};
}

} // namespace riesz
