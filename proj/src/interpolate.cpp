#include "riesz/interpolate.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "riesz/conditions.hpp"
#include "riesz/errors.hpp"

namespace riesz {

uint32_t min_enclosing_member(const CharTriple& t, const GroupElement& x, const GroupElement& y) {
    return t.faces.min_member_containing(support_mask(t, gsub(t, y, x)));
}

namespace {

GroupElement lattice_combination(const CharTriple& t, const std::vector<Int>& c,
                                 const IntMatrix& lattice) {
    std::vector<Int> coeff = left_mul(c, lattice);
    std::vector<Rat> q(coeff.size());
    for (size_t j = 0; j < coeff.size(); ++j) q[j] = Rat(coeff[j]);
    return element_from_coeffs(t, std::move(q));
}

bool certified_inside(const CharTriple& t, const GroupElement& m, uint32_t coords,
                      const std::map<int, QInterval>& boxes) {
    for (int i : mask_to_indices(coords)) {
        const QInterval& box = boxes.at(i);
        const FieldElement& v = m.coords[i - 1];
        if (t.field.sign(t.field.sub(v, t.field.from_rat(box.lo))) != 1) return false;
        if (t.field.sign(t.field.sub(t.field.from_rat(box.hi), v)) != 1) return false;
    }
    return true;
}

// Iterative-deepening enumeration of integer coefficient vectors on the ideal
// lattice rows, pruned with interval arithmetic against the target boxes.
struct BoxSearch {
    const CharTriple& t;
    const IdealData& id;
    uint32_t coords;
    const std::map<int, QInterval>& boxmap;
    std::vector<QInterval> boxes;               // per box coordinate
    std::vector<size_t> order;                  // lattice row visit order
    std::vector<std::vector<QInterval>> bounds; // per ordered row, per box coordinate
    std::vector<std::vector<Rat>> suffix;       // reachable magnitude below each level
    long long budget;
    long long nodes = 0;
    long bound = 1;
    std::vector<long> coeff;

    std::optional<GroupElement> run() {
        size_t rows = order.size(), ell = boxes.size();
        suffix.assign(rows + 1, std::vector<Rat>(ell, Rat(0)));
        for (size_t r = rows; r-- > 0;)
            for (size_t q = 0; q < ell; ++q)
                suffix[r][q] =
                    suffix[r + 1][q] + std::max(abs(bounds[r][q].lo), abs(bounds[r][q].hi));
        coeff.assign(rows, 0);
        std::vector<QInterval> zero(ell, QInterval::point(Rat(0)));
        for (;;) {
            auto hit = descend(0, zero);
            if (hit) return hit;
            if (bound >= (1L << 22)) return std::nullopt;
            bound *= 2;
        }
    }

    std::optional<GroupElement> descend(size_t r, const std::vector<QInterval>& partial) {
        if (++nodes > budget) fail(Errc::SearchBudget, "dense_approx node budget exhausted");
        for (size_t q = 0; q < boxes.size(); ++q) {
            Rat reach = Rat(bound) * suffix[r][q];
            if (partial[q].lo - reach > boxes[q].hi) return std::nullopt;
            if (partial[q].hi + reach < boxes[q].lo) return std::nullopt;
        }
        if (r == order.size()) {
            long sup = 0;
            for (long v : coeff) sup = std::max(sup, std::abs(v));
            if (bound > 1 && 2 * sup <= bound) return std::nullopt; // tested at an earlier depth
            std::vector<Int> c(id.coeff_lattice.rows, Int(0));
            for (size_t k = 0; k < order.size(); ++k) c[order[k]] = coeff[k];
            GroupElement m = lattice_combination(t, c, id.coeff_lattice);
            if (certified_inside(t, m, coords, boxmap)) return m;
            return std::nullopt;
        }
        for (long v = -bound; v <= bound; ++v) {
            coeff[r] = v;
            std::vector<QInterval> next(boxes.size());
            for (size_t q = 0; q < boxes.size(); ++q)
                next[q] = iadd(partial[q], iscale(Rat(v), bounds[r][q]));
            auto hit = descend(r + 1, next);
            if (hit) return hit;
        }
        return std::nullopt;
    }
};

} // namespace

GroupElement dense_approx(const CharTriple& t, uint32_t s, uint32_t coords,
                          const std::map<int, QInterval>& boxes, long long budget) {
    if (!t.faces.is_member(s)) fail(Errc::NotAMember, "set " + mask_str(s) + " is not a member");
    if ((coords & ~s) != 0) fail(Errc::BadCoords, "coordinates outside the member set");
    auto idx = mask_to_indices(coords);
    for (int i : idx) {
        auto it = boxes.find(i);
        if (it == boxes.end() || !(it->second.lo < it->second.hi))
            fail(Errc::BadCoords, "missing or empty box for coordinate " + std::to_string(i));
    }
    if (idx.empty()) return element_zero(t);

    if (t.mode == Mode::VectorSpace) {
        std::vector<FieldElement> c(t.n, t.field.zero());
        for (int i : idx) c[i - 1] = t.field.from_rat(boxes.at(i).mid());
        GroupElement m = element_from_coords(t, std::move(c));
        if (!certified_inside(t, m, coords, boxes))
            fail(Errc::SearchBudget, "vector_space midpoint failed certification");
        return m;
    }

    IdealData id = ideal(t, s);
    size_t ell = idx.size();
    std::vector<std::vector<FieldElement>> proj;
    proj.reserve(id.ambient_basis.size());
    for (const auto& v : id.ambient_basis) {
        std::vector<FieldElement> p;
        for (int i : idx) p.push_back(v[i - 1]);
        proj.push_back(std::move(p));
    }

    if (t.mode == Mode::Divisible) {
        if (field_rank(t.field, proj) < ell)
            fail(Errc::NotDense, "ideal projection does not span the target space");
        auto pivots = field_independent_rows(t.field, proj, ell);
        std::vector<std::vector<FieldElement>> a(ell, std::vector<FieldElement>(ell));
        std::vector<FieldElement> tau(ell);
        for (size_t q = 0; q < ell; ++q) {
            for (size_t r = 0; r < ell; ++r) a[q][r] = proj[(*pivots)[r]][q];
            tau[q] = t.field.from_rat(boxes.at(idx[q]).mid());
        }
        auto xstar = field_solve(t.field, a, tau);
        Rat prec(1, 16);
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Rat> lattice_coeff(id.coeff_lattice.rows, Rat(0));
            for (size_t r = 0; r < ell; ++r)
                lattice_coeff[(*pivots)[r]] = t.field.enclose(xstar[r], prec).mid();
            GroupElement m = element_from_coeffs(t, left_mul_rat(lattice_coeff, id.coeff_lattice));
            if (certified_inside(t, m, coords, boxes)) return m;
            prec /= 16;
        }
        fail(Errc::SearchBudget, "divisible-mode rounding failed to certify");
    }

    if (!is_dense_projection(t, s, coords))
        fail(Errc::NotDense, "ideal projection is not dense");

    BoxSearch search{t, id, coords, boxes};
    search.budget = budget;
    for (int i : idx) search.boxes.push_back(boxes.at(i));
    // visit rows grouped by the box coordinates they touch, so coordinates get
    // pinned as early as possible
    std::vector<std::pair<uint32_t, size_t>> keyed;
    for (size_t r = 0; r < id.coeff_lattice.rows; ++r) {
        uint32_t touched = 0;
        for (size_t q = 0; q < ell; ++q)
            if (!proj[r][q].is_zero()) touched |= uint32_t{1} << q;
        keyed.emplace_back(touched, r);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    Rat prec(Int(1), Int(1) << 40);
    for (auto [touched, r] : keyed) {
        search.order.push_back(r);
        std::vector<QInterval> row;
        for (size_t q = 0; q < ell; ++q) row.push_back(t.field.enclose(proj[r][q], prec));
        search.bounds.push_back(std::move(row));
    }
    auto hit = search.run();
    if (!hit) fail(Errc::SearchBudget, "dense_approx deepening bound exhausted");
    return *hit;
}

namespace {

std::string trace_str(const InterpolationTrace& tr) {
    std::ostringstream os;
    os << "T11=" << mask_str(tr.t11) << " T12=" << mask_str(tr.t12) << " T21=" << mask_str(tr.t21)
       << " T22=" << mask_str(tr.t22) << " R=" << mask_str(tr.r) << " Rhat=" << mask_str(tr.rhat)
       << " retries=" << tr.retries;
    return os.str();
}

[[noreturn]] void proof_gap(const InterpolationTrace& tr, const std::string& what) {
    fail(Errc::InternalProofGap, what + " [" + trace_str(tr) + "]");
}

// a1 - a2 = g2 - g1 with g1 in I_sa, g2 in I_sb.
void decompose(const CharTriple& t, const GroupElement& diff, uint32_t sa, uint32_t sb,
               GroupElement& g1, GroupElement& g2, const InterpolationTrace& tr) {
    if (t.mode == Mode::VectorSpace) {
        if ((support_mask(t, diff) & ~(sa | sb)) != 0)
            proof_gap(tr, "difference not supported in the union ideal");
        std::vector<FieldElement> c1(t.n, t.field.zero()), c2(t.n, t.field.zero());
        for (int i = 0; i < t.n; ++i) {
            uint32_t bit = uint32_t{1} << i;
            if (diff.coords[i].is_zero()) continue;
            if ((sb & bit) != 0)
                c2[i] = diff.coords[i];
            else
                c1[i] = t.field.neg(diff.coords[i]);
        }
        g1 = element_from_coords(t, std::move(c1));
        g2 = element_from_coords(t, std::move(c2));
        return;
    }
    IntMatrix la = ideal(t, sa).coeff_lattice;
    IntMatrix lb = ideal(t, sb).coeff_lattice;
    IntMatrix stacked = vstack(la, lb);
    if (t.mode == Mode::FinitelyGenerated) {
        std::vector<Int> target(diff.coeffs.size());
        for (size_t j = 0; j < target.size(); ++j) target[j] = diff.coeffs[j].get_num();
        auto w = member_with_witness(stacked, target);
        if (!w) proof_gap(tr, "condition (iii) decomposition has no lattice witness");
        std::vector<Int> wa(w->begin(), w->begin() + la.rows);
        std::vector<Int> wb(w->begin() + la.rows, w->end());
        g1 = gneg(t, lattice_combination(t, wa, la));
        g2 = lattice_combination(t, wb, lb);
        return;
    }
    std::vector<Rat> target = diff.coeffs;
    auto w = member_rat(stacked, target);
    if (!w) proof_gap(tr, "condition (iii) decomposition has no rational witness");
    std::vector<Rat> wa(w->begin(), w->begin() + la.rows);
    std::vector<Rat> wb(w->begin() + la.rows, w->end());
    g1 = gneg(t, element_from_coeffs(t, left_mul_rat(wa, la)));
    g2 = element_from_coeffs(t, left_mul_rat(wb, lb));
}

} // namespace

InterpolationResult interpolant(const CharTriple& t, const GroupElement& a1,
                                const GroupElement& a2, const GroupElement& b1,
                                const GroupElement& b2, long long budget) {
    ConditionReport rep = check_all(t);
    if (!rep.overall) fail(Errc::ConditionsFail, "triple does not have Riesz interpolation");
    const GroupElement* as[2] = {&a1, &a2};
    const GroupElement* bs[2] = {&b1, &b2};
    for (int s = 0; s < 2; ++s)
        for (int u = 0; u < 2; ++u)
            if (!leq(t, *as[s], *bs[u]))
                fail(Errc::NotComparable,
                     "a" + std::to_string(s + 1) + " <= b" + std::to_string(u + 1) + " fails");

    InterpolationTrace tr;
    tr.t11 = min_enclosing_member(t, a1, b1);
    tr.t12 = min_enclosing_member(t, a1, b2);
    tr.t21 = min_enclosing_member(t, a2, b1);
    tr.t22 = min_enclosing_member(t, a2, b2);
    if ((tr.t11 | tr.t22) != (tr.t12 | tr.t21))
        proof_gap(tr, "T-set union identity violated");

    decompose(t, gsub(t, a1, a2), tr.t11 & tr.t12, tr.t21 & tr.t22, tr.g1, tr.g2, tr);
    tr.c = gadd(t, a1, tr.g1);
    if (!gequal(tr.c, gadd(t, a2, tr.g2))) proof_gap(tr, "c = a1 + g1 = a2 + g2 violated");

    tr.r = tr.t11 & tr.t12 & tr.t21 & tr.t22;
    uint32_t rcur = tr.r;
    for (bool changed = true; changed;) {
        changed = false;
        for (uint32_t s : t.faces.members) {
            if (changed) break;
            for (int k = 1; k <= t.n && !changed; ++k) {
                uint32_t bit = uint32_t{1} << (k - 1);
                if ((s & bit) != 0) continue;
                uint32_t sk = s | bit;
                if (!t.faces.is_member(sk) || (sk & ~rcur) != 0) continue;
                if ((t.faces.strict_of(rcur) & bit) == 0) continue;
                if (!is_cyclic_quotient(t, s, sk)) continue;
                rcur &= ~bit;
                if (!t.faces.is_member(rcur))
                    proof_gap(tr, "reduced set left the lattice (condition (iv)(b))");
                changed = true;
            }
        }
    }
    tr.rhat = rcur;

    uint32_t strict = t.faces.strict_of(tr.rhat);
    const Field& f = t.field;
    std::map<int, QInterval> boxes;
    for (int i : mask_to_indices(strict)) {
        const FieldElement& x1 = a1.coords[i - 1];
        const FieldElement& x2 = a2.coords[i - 1];
        const FieldElement& y1 = b1.coords[i - 1];
        const FieldElement& y2 = b2.coords[i - 1];
        FieldElement lo = f.sign(f.sub(x1, x2)) >= 0 ? x1 : x2;
        FieldElement hi = f.sign(f.sub(y1, y2)) <= 0 ? y1 : y2;
        FieldElement gap = f.sub(hi, lo);
        if (f.sign(gap) != 1) proof_gap(tr, "strict gap violated at coordinate " + std::to_string(i));
        lo = f.sub(lo, tr.c.coords[i - 1]);
        hi = f.sub(hi, tr.c.coords[i - 1]);
        // strictly nested rational box: enclose both ends tighter than the gap
        Rat eps(1, 2);
        QInterval egap = f.enclose(gap, eps);
        while (sgn(egap.lo) <= 0) {
            eps /= 2;
            egap = f.enclose(gap, eps);
        }
        Rat margin = egap.lo / 8;
        QInterval elo = f.enclose(lo, margin), ehi = f.enclose(hi, margin);
        boxes.emplace(i, QInterval{elo.hi, ehi.lo});
    }

    for (tr.retries = 0; tr.retries <= 8; ++tr.retries) {
        tr.m = dense_approx(t, tr.rhat, strict, boxes, budget);
        GroupElement z = gadd(t, tr.c, tr.m);
        bool ok = true;
        for (int s = 0; s < 2 && ok; ++s)
            if (!leq(t, *as[s], z)) ok = false;
        for (int u = 0; u < 2 && ok; ++u)
            if (!leq(t, z, *bs[u])) ok = false;
        if (ok) return InterpolationResult{std::move(z), std::move(tr)};
        if (strict == 0) break; // nothing to retarget
        for (auto& [i, box] : boxes) {
            Rat mid = box.mid(), quarter = box.width() / 4;
            box = QInterval{mid - quarter, mid + quarter};
        }
    }
    proof_gap(tr, "interpolant verification failed after retries");
}

std::optional<GroupElement> oracle_search(const CharTriple& t, const GroupElement& a1,
                                          const GroupElement& a2, const GroupElement& b1,
                                          const GroupElement& b2, long bound) {
    if (t.mode != Mode::FinitelyGenerated)
        fail(Errc::ModeMismatch, "oracle_search requires finitely_generated mode");
    size_t m = t.gen_count();
    std::vector<long> c(m, -bound);
    for (;;) {
        std::vector<Rat> coeffs(m);
        for (size_t j = 0; j < m; ++j) coeffs[j] = Rat(c[j]);
        GroupElement z = element_from_coeffs(t, std::move(coeffs));
        if (leq(t, a1, z) && leq(t, a2, z) && leq(t, z, b1) && leq(t, z, b2)) return z;
        size_t j = m;
        while (j > 0 && c[j - 1] == bound) c[--j] = -bound;
        if (j == 0) return std::nullopt;
        ++c[j - 1];
    }
}

} // namespace riesz
