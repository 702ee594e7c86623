#include "riesz/zlinalg.hpp"

#include <cassert>
#include <stdexcept>

namespace riesz {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(size_t i) const {
    return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

namespace {

void swap_rows(IntMatrix& m, size_t i, size_t j) {
    for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void negate_row(IntMatrix& m, size_t i) {
    for (size_t k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
}

// row_i -= q * row_r
void shear(IntMatrix& m, size_t i, size_t r, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < m.cols; ++k) m.at(i, k) -= q * m.at(r, k);
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    size_t r = 0;
    for (size_t j = 0; j < m.cols && r < m.rows; ++j) {
        for (;;) {
            size_t best = m.rows;
            for (size_t i = r; i < m.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                if (best == m.rows ||
                    mpz_cmpabs(h.at(i, j).get_mpz_t(), h.at(best, j).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == m.rows) break; // no pivot in this column
            if (best != r) {
                swap_rows(h, best, r);
                swap_rows(u, best, r);
            }
            if (h.at(r, j) < 0) {
                negate_row(h, r);
                negate_row(u, r);
            }
            bool leftover = false;
            for (size_t i = r + 1; i < m.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                Int q = fdiv(h.at(i, j), h.at(r, j));
                shear(h, i, r, q);
                shear(u, i, r, q);
                if (h.at(i, j) != 0) leftover = true;
            }
            if (!leftover) {
                // reduce entries above the pivot into [0, pivot)
                for (size_t i = 0; i < r; ++i) {
                    Int q = fdiv(h.at(i, j), h.at(r, j));
                    shear(h, i, r, q);
                    shear(u, i, r, q);
                }
                ++r;
                break;
            }
        }
    }
    return {std::move(h), std::move(u)};
}

IntMatrix hnf_basis(const IntMatrix& m) {
    HnfResult res = hnf(m);
    size_t nz = 0;
    for (size_t i = 0; i < res.h.rows; ++i) {
        bool zero = true;
        for (size_t j = 0; j < res.h.cols; ++j)
            if (res.h.at(i, j) != 0) { zero = false; break; }
        if (!zero) nz = i + 1;
    }
    IntMatrix out(nz, res.h.cols);
    std::copy(res.h.a.begin(), res.h.a.begin() + nz * res.h.cols, out.a.begin());
    return out;
}

IntMatrix kernel_int(const RatMatrix& m) {
    // clear denominators row by row, then take the left kernel of the transpose
    IntMatrix b(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
        for (size_t j = 0; j < m.cols; ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            assert(scaled.get_den() == 1);
            b.at(i, j) = scaled.get_num();
        }
    }
    IntMatrix t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = b.at(i, j);
    HnfResult res = hnf(t);
    size_t rank = 0;
    for (size_t i = 0; i < res.h.rows; ++i)
        for (size_t j = 0; j < res.h.cols; ++j)
            if (res.h.at(i, j) != 0) { rank = i + 1; break; }
    size_t dim = t.rows - rank;
    IntMatrix out(dim, m.cols);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = res.u.at(rank + i, j);
    return hnf_basis(out); // canonical basis of the kernel lattice
}

namespace {

// Solve y * H = t over the staircase rows of an HNF; Exact is Int or Rat.
template <typename Exact>
std::optional<std::vector<Exact>> solve_staircase(const IntMatrix& h, std::vector<Exact> t) {
    std::vector<Exact> y(h.rows, Exact(0));
    for (size_t k = 0; k < h.rows; ++k) {
        size_t p = h.cols;
        for (size_t j = 0; j < h.cols; ++j)
            if (h.at(k, j) != 0) { p = j; break; }
        if (p == h.cols) break; // zero rows (and all below) contribute nothing
        if constexpr (std::is_same_v<Exact, Int>) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t[p].get_mpz_t(), h.at(k, p).get_mpz_t());
            if (rem != 0) return std::nullopt;
            y[k] = q;
        } else {
            y[k] = t[p] / Exact(h.at(k, p));
        }
        if (y[k] != 0)
            for (size_t j = p; j < h.cols; ++j) t[j] -= y[k] * Exact(h.at(k, j));
    }
    for (const auto& v : t)
        if (v != 0) return std::nullopt;
    return y;
}

template <typename Exact>
std::vector<Exact> apply_u(const std::vector<Exact>& y, const IntMatrix& u) {
    std::vector<Exact> c(u.cols, Exact(0));
    for (size_t k = 0; k < u.rows; ++k) {
        if (y[k] == 0) continue;
        for (size_t j = 0; j < u.cols; ++j) c[j] += y[k] * Exact(u.at(k, j));
    }
    return c;
}

} // namespace

std::optional<std::vector<Int>> member_with_witness(const IntMatrix& lattice,
                                                    const std::vector<Int>& target) {
    if (target.size() != lattice.cols) throw std::logic_error("member_with_witness: size mismatch");
    HnfResult res = hnf(lattice);
    auto y = solve_staircase<Int>(res.h, target);
    if (!y) return std::nullopt;
    std::vector<Int> c = apply_u(*y, res.u);
    assert(left_mul(c, lattice) == target);
    return c;
}

std::optional<std::vector<Rat>> member_rat(const IntMatrix& lattice,
                                           const std::vector<Rat>& target) {
    if (target.size() != lattice.cols) throw std::logic_error("member_rat: size mismatch");
    HnfResult res = hnf(lattice);
    auto y = solve_staircase<Rat>(res.h, target);
    if (!y) return std::nullopt;
    return apply_u(*y, res.u);
}

bool lattice_sum_eq(const IntMatrix& l1, const IntMatrix& l2, const IntMatrix& l3) {
    if (l1.cols != l2.cols || l1.cols != l3.cols)
        throw std::logic_error("lattice_sum_eq: column mismatch");
    return hnf_basis(vstack(l1, l2)) == hnf_basis(l3);
}

size_t rank_rat(const RatMatrix& m) {
    // fraction-free elimination: clear denominators, then cross-multiplication
    // row updates with per-row gcd reduction to control growth
    IntMatrix b(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
        for (size_t j = 0; j < m.cols; ++j) b.at(i, j) = Rat(m.at(i, j) * Rat(l)).get_num();
    }
    size_t r = 0;
    for (size_t j = 0; j < m.cols && r < m.rows; ++j) {
        size_t piv = m.rows;
        for (size_t i = r; i < m.rows; ++i)
            if (b.at(i, j) != 0) { piv = i; break; }
        if (piv == m.rows) continue;
        if (piv != r) swap_rows(b, piv, r);
        for (size_t i = r + 1; i < m.rows; ++i) {
            if (b.at(i, j) == 0) continue;
            Int p = b.at(r, j), q = b.at(i, j);
            Int g = 0;
            for (size_t k = j; k < m.cols; ++k) {
                b.at(i, k) = p * b.at(i, k) - q * b.at(r, k);
                g = gcd(g, b.at(i, k));
            }
            if (g > 1)
                for (size_t k = j; k < m.cols; ++k) mpz_divexact(
                    b.at(i, k).get_mpz_t(), b.at(i, k).get_mpz_t(), g.get_mpz_t());
        }
        ++r;
    }
    return r;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols != bottom.cols && top.rows != 0 && bottom.rows != 0)
        throw std::logic_error("vstack: column mismatch");
    size_t cols = top.rows == 0 ? bottom.cols : top.cols;
    IntMatrix out(top.rows + bottom.rows, cols);
    std::copy(top.a.begin(), top.a.end(), out.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + top.a.size());
    return out;
}

std::vector<Int> left_mul(const std::vector<Int>& c, const IntMatrix& m) {
    std::vector<Int> out(m.cols, Int(0));
    for (size_t k = 0; k < m.rows; ++k) {
        if (c[k] == 0) continue;
        for (size_t j = 0; j < m.cols; ++j) out[j] += c[k] * m.at(k, j);
    }
    return out;
}

std::vector<Rat> left_mul_rat(const std::vector<Rat>& c, const IntMatrix& m) {
    std::vector<Rat> out(m.cols, Rat(0));
    for (size_t k = 0; k < m.rows; ++k) {
        if (c[k] == 0) continue;
        for (size_t j = 0; j < m.cols; ++j) out[j] += c[k] * Rat(m.at(k, j));
    }
    return out;
}

} // namespace riesz
