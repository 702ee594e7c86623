#include "riesz/scalars.hpp"

#include <cassert>
#include <utility>

namespace riesz {
namespace {

// Dense polynomials over Q, constant term first. The zero polynomial is the
// empty vector; all helpers keep results trimmed.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QInterval eval(const Poly& p, const QInterval& x) {
    QInterval acc = QInterval::point(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = iadd(imul(acc, x), QInterval::point(*it));
    return acc;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * p[k]);
    trim(d);
    return d;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rat(0));
    for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    assert(!b.empty());
    Poly r = a, q;
    trim(r);
    if (deg(r) >= deg(b)) q.resize(deg(r) - deg(b) + 1, Rat(0));
    while (deg(r) >= deg(b)) {
        Rat lead = r.back() / b.back();
        int shift = deg(r) - deg(b);
        q[shift] = lead;
        for (size_t k = 0; k < b.size(); ++k) r[shift + k] -= lead * b[k];
        trim(r);
    }
    trim(q);
    return {q, r};
}

int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Number of distinct real roots in (lo, hi].
int sturm_count(const Poly& p, const Rat& lo, const Rat& hi) {
    std::vector<Poly> chain{p, derivative(p)};
    trim(chain[0]);
    while (!chain.back().empty() && deg(chain.back()) > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

// g = u*f + v*m, g the (unnormalized) gcd; only u is tracked.
std::pair<Poly, Poly> ext_gcd_u(const Poly& f, const Poly& m) {
    Poly r0 = f, r1 = m;
    Poly u0 = {Rat(1)}, u1 = {};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

} // namespace

Field::Field(FieldSpec spec, long bisection_cap) : spec_(std::move(spec)), cap_(bisection_cap) {
    int d = spec_.degree();
    if (d < 1) fail(Errc::BadFieldSpec, "min_poly must have degree >= 1");
    if (spec_.min_poly.back() != 1) fail(Errc::BadFieldSpec, "min_poly must be monic");
    if (d == 1) return;
    if (!(spec_.lo < spec_.hi)) fail(Errc::BadFieldSpec, "root_interval must satisfy lo < hi");
    int slo = sgn(eval(spec_.min_poly, spec_.lo));
    int shi = sgn(eval(spec_.min_poly, spec_.hi));
    if (slo == 0 || shi == 0)
        fail(Errc::BadFieldSpec, "min_poly vanishes at a root_interval endpoint");
    if (slo == shi) fail(Errc::BadFieldSpec, "min_poly has equal signs at root_interval endpoints");
    if (sturm_count(spec_.min_poly, spec_.lo, spec_.hi) != 1)
        fail(Errc::BadFieldSpec, "root_interval does not isolate exactly one real root");
}

FieldElement Field::zero() const { return FieldElement{std::vector<Rat>(degree(), Rat(0))}; }

FieldElement Field::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

FieldElement Field::from_rat(const Rat& q) const {
    auto e = zero();
    e.c[0] = q;
    return e;
}

FieldElement Field::gen() const {
    if (degree() < 2) fail(Errc::BadFieldSpec, "gen() requires degree >= 2");
    auto e = zero();
    e.c[1] = 1;
    return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] -= b.c[k];
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    FieldElement r = a;
    for (auto& q : r.c) q = -q;
    return r;
}

FieldElement Field::mul_rat(const Rat& c, const FieldElement& a) const {
    FieldElement r = a;
    for (auto& q : r.c) q *= c;
    return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    size_t d = a.c.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) prod[i + j] += a.c[i] * b.c[j];
    // reduce modulo the monic min_poly: alpha^d = -(m_0 + ... + m_{d-1} alpha^{d-1})
    for (size_t k = prod.size(); k-- > d;) {
        Rat t = prod[k];
        if (sgn(t) == 0) continue;
        prod[k] = 0;
        for (size_t i = 0; i < d; ++i) prod[k - d + i] -= t * spec_.min_poly[i];
    }
    prod.resize(d);
    return FieldElement{std::move(prod)};
}

FieldElement Field::inv(const FieldElement& a) const {
    if (a.is_zero()) fail(Errc::DivisionByZero, "inv(0)");
    if (degree() == 1) return FieldElement{{Rat(1) / a.c[0]}};
    Poly f = a.c;
    trim(f);
    auto [g, u] = ext_gcd_u(f, spec_.min_poly);
    if (deg(g) > 0)
        fail(Errc::ReducibleField, "min_poly shares a nontrivial factor with the operand");
    assert(!g.empty());
    Rat scale = Rat(1) / g[0];
    Poly res = divmod(u, spec_.min_poly).second;
    std::vector<Rat> c(degree(), Rat(0));
    for (size_t k = 0; k < res.size(); ++k) c[k] = res[k] * scale;
    return FieldElement{std::move(c)};
}

void Field::refine(QInterval& iv, int& sign_lo, long& steps) const {
    if (++steps > cap_) fail(Errc::PrecisionCap, "bisection cap exceeded; malformed FieldSpec?");
    Rat mid = iv.mid();
    int sm = sgn(eval(spec_.min_poly, mid));
    if (sm == 0)
        fail(Errc::ReducibleField, "min_poly has a rational root inside root_interval");
    if (sm == sign_lo)
        iv.lo = mid;
    else
        iv.hi = mid;
}

int Field::sign(const FieldElement& a) const {
    if (a.is_zero()) return 0;
    if (degree() == 1) return sgn(a.c[0]);
    QInterval iv{spec_.lo, spec_.hi};
    int sign_lo = sgn(eval(spec_.min_poly, iv.lo));
    long steps = 0;
    for (;;) {
        QInterval v = eval(a.c, iv);
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
        refine(iv, sign_lo, steps);
    }
}

QInterval Field::enclose(const FieldElement& a, const Rat& eps) const {
    if (sgn(eps) <= 0) fail(Errc::ParseError, "enclose requires eps > 0");
    if (degree() == 1) return QInterval::point(a.c[0]);
    QInterval iv{spec_.lo, spec_.hi};
    int sign_lo = sgn(eval(spec_.min_poly, iv.lo));
    long steps = 0;
    Rat target = eps / 8; // keeps the interval well centered on the value
    for (;;) {
        QInterval v = eval(a.c, iv);
        if (v.width() <= target) return v;
        refine(iv, sign_lo, steps);
    }
}

bool Field::is_rational(const FieldElement& a) const {
    for (size_t k = 1; k < a.c.size(); ++k)
        if (sgn(a.c[k]) != 0) return false;
    return true;
}

namespace {

// Row echelon over F, tracking which input rows became pivots. Destructive.
struct FieldEchelon {
    const Field& f;
    std::vector<std::vector<FieldElement>> basis; // echelon rows
    std::vector<size_t> pivot_col;

    explicit FieldEchelon(const Field& fld) : f(fld) {}

    // Returns true when the row was independent of the current basis.
    bool absorb(std::vector<FieldElement> row) {
        for (size_t b = 0; b < basis.size(); ++b) {
            size_t pc = pivot_col[b];
            if (row[pc].is_zero()) continue;
            FieldElement factor = f.mul(row[pc], f.inv(basis[b][pc]));
            for (size_t j = 0; j < row.size(); ++j)
                row[j] = f.sub(row[j], f.mul(factor, basis[b][j]));
        }
        for (size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_zero()) {
                basis.push_back(std::move(row));
                pivot_col.push_back(j);
                return true;
            }
        }
        return false;
    }
};

} // namespace

size_t field_rank(const Field& f, const std::vector<std::vector<FieldElement>>& rows) {
    FieldEchelon ech(f);
    size_t r = 0;
    for (const auto& row : rows)
        if (ech.absorb(row)) ++r;
    return r;
}

std::optional<std::vector<size_t>>
field_independent_rows(const Field& f, const std::vector<std::vector<FieldElement>>& rows,
                       size_t want) {
    FieldEchelon ech(f);
    std::vector<size_t> picked;
    for (size_t i = 0; i < rows.size() && picked.size() < want; ++i)
        if (ech.absorb(rows[i])) picked.push_back(i);
    if (picked.size() < want) return std::nullopt;
    return picked;
}

std::vector<FieldElement> field_solve(const Field& f, std::vector<std::vector<FieldElement>> m,
                                      std::vector<FieldElement> b) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("field_solve: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        FieldElement recip = f.inv(m[col][col]);
        for (size_t j = 0; j < n; ++j) m[col][j] = f.mul(recip, m[col][j]);
        b[col] = f.mul(recip, b[col]);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            FieldElement factor = m[i][col];
            for (size_t j = 0; j < n; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[col][j]));
            b[i] = f.sub(b[i], f.mul(factor, b[col]));
        }
    }
    return b;
}

std::vector<std::vector<FieldElement>>
field_inverse(const Field& f, const std::vector<std::vector<FieldElement>>& m) {
    size_t n = m.size();
    // columns of the inverse, assembled back into rows at the end
    std::vector<std::vector<FieldElement>> cols(n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> e(n, f.zero());
        e[j] = f.one();
        cols[j] = field_solve(f, m, e);
    }
    std::vector<std::vector<FieldElement>> inv(n, std::vector<FieldElement>(n, f.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
    return inv;
}

} // namespace riesz
