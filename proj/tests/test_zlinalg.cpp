#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/zlinalg.hpp"
#include "testutil.hpp"

using namespace riesz;
using riesz::test::Rng;

namespace {

IntMatrix make_int(size_t rows, size_t cols, std::vector<long> vals) {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < vals.size(); ++i) m.a[i] = vals[i];
    return m;
}

RatMatrix make_rat(size_t rows, size_t cols, std::vector<Rat> vals) {
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < vals.size(); ++i) m.a[i] = vals[i];
    return m;
}

bool is_hnf(const IntMatrix& h) {
    size_t last_pivot = 0;
    bool seen_zero_row = false;
    bool first = true;
    for (size_t i = 0; i < h.rows; ++i) {
        size_t p = h.cols;
        for (size_t j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0) { p = j; break; }
        if (p == h.cols) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (!first && p <= last_pivot) return false;
        if (h.at(i, p) <= 0) return false;
        for (size_t k = 0; k < i; ++k)
            if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
        last_pivot = p;
        first = false;
    }
    return true;
}

Int det2(const IntMatrix& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

IntMatrix random_unimodular(Rng& rng, size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        size_t i = rng.integer(0, n - 1), j = rng.integer(0, n - 1);
        if (i == j) continue;
        Int q = rng.integer(-3, 3);
        for (size_t k = 0; k < n; ++k) u.at(i, k) += q * u.at(j, k);
    }
    return u;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

} // namespace

TEST_CASE("hnf on the spec examples") {
    auto id = IntMatrix::identity(2);
    HnfResult r1 = hnf(id);
    CHECK(r1.h == id);
    CHECK(r1.u == id);

    IntMatrix zero(2, 2);
    HnfResult r2 = hnf(zero);
    CHECK(r2.h == zero);
    CHECK(r2.u == id);

    IntMatrix a = make_int(2, 2, {2, 4, 6, 8});
    HnfResult r3 = hnf(a);
    CHECK(r3.h == make_int(2, 2, {2, 0, 0, 4}));
    CHECK(mat_mul(r3.u, a) == r3.h);
    Int d = det2(r3.u);
    CHECK((d == 1 || d == -1));
    CHECK(is_hnf(r3.h));
}

TEST_CASE("kernel_int") {
    CHECK(kernel_int(make_rat(1, 2, {Rat(1), Rat(1)})) == make_int(1, 2, {1, -1}));

    RatMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(kernel_int(id3).rows == 0);

    CHECK(kernel_int(make_rat(1, 2, {Rat(2), Rat(-1)})) == make_int(1, 2, {1, 2}));
}

TEST_CASE("member_with_witness") {
    IntMatrix l = make_int(2, 2, {2, 0, 0, 2});
    auto w1 = member_with_witness(l, {Int(4), Int(2)});
    REQUIRE(w1);
    CHECK(*w1 == std::vector<Int>{2, 1});

    CHECK(!member_with_witness(l, {Int(1), Int(0)}));

    auto w3 = member_with_witness(l, {Int(-2), Int(4)});
    REQUIRE(w3);
    CHECK(*w3 == std::vector<Int>{-1, 2});
}

TEST_CASE("lattice_sum_eq") {
    CHECK(lattice_sum_eq(make_int(1, 2, {1, 0}), make_int(1, 2, {0, 1}), IntMatrix::identity(2)));
    CHECK(!lattice_sum_eq(make_int(1, 2, {2, 0}), make_int(1, 2, {0, 1}), IntMatrix::identity(2)));
    CHECK(lattice_sum_eq(make_int(1, 2, {1, 1}), make_int(1, 2, {1, -1}),
                         make_int(2, 2, {1, 1, 0, 2})));
}

TEST_CASE("rank_rat") {
    RatMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(rank_rat(id3) == 3);
    CHECK(rank_rat(RatMatrix(2, 2)) == 0);
    CHECK(rank_rat(make_rat(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)})) == 1);
}

TEST_CASE("hnf canonicity and idempotence") {
    Rng rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        size_t n = rng.integer(1, 3), rows = rng.integer(1, 4);
        IntMatrix a(rows, n);
        for (auto& v : a.a) v = rng.integer(-9, 9);

        IntMatrix h = hnf_basis(a);
        CHECK(is_hnf(h));
        CHECK(hnf_basis(h) == h);

        // equal lattices produce identical canonical bases
        IntMatrix transformed = mat_mul(random_unimodular(rng, rows), a);
        CHECK(hnf_basis(transformed) == h);
    }
}

TEST_CASE("kernel and witness exactness") {
    Rng rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = rng.integer(1, 3), cols = rng.integer(1, 4);
        RatMatrix a(rows, cols);
        for (auto& v : a.a) v = rng.rational(6, 4);

        IntMatrix k = kernel_int(a);
        for (size_t r = 0; r < k.rows; ++r)
            for (size_t i = 0; i < rows; ++i) {
                Rat dot(0);
                for (size_t j = 0; j < cols; ++j) dot += a.at(i, j) * Rat(k.at(r, j));
                CHECK(dot == 0);
            }

        // random integer combinations of the kernel basis are members
        if (k.rows > 0) {
            std::vector<Int> combo(k.rows);
            for (auto& c : combo) c = rng.integer(-5, 5);
            auto target = left_mul(combo, k);
            auto w = member_with_witness(k, target);
            REQUIRE(w);
            CHECK(left_mul(*w, k) == target);
        }
    }
}
