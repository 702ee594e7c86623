#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/triple.hpp"
#include "testutil.hpp"

using namespace riesz;
using riesz::test::Rng;
using riesz::test::load_fixture;

namespace {

GroupElement elem(const CharTriple& t, std::vector<long> coeffs) {
    std::vector<Rat> q(coeffs.begin(), coeffs.end());
    return element_from_coeffs(t, std::move(q));
}

GroupElement random_element(const CharTriple& t, Rng& rng, long mag) {
    if (t.mode == Mode::VectorSpace) {
        std::vector<FieldElement> c;
        for (int i = 0; i < t.n; ++i) c.push_back(t.field.from_rat(Rat(rng.integer(-mag, mag))));
        return element_from_coords(t, std::move(c));
    }
    std::vector<Rat> c;
    for (size_t j = 0; j < t.gen_count(); ++j) c.push_back(Rat(rng.integer(-mag, mag)));
    return element_from_coeffs(t, std::move(c));
}

// The directedness recipe: dominate both elements inside I_S by rounding the
// real solution of the spanning system to integers.
GroupElement directed_upper(const CharTriple& t, uint32_t s, const GroupElement& h1,
                            const GroupElement& h2) {
    const Field& f = t.field;
    IdealData id = ideal(t, s);
    auto idx = mask_to_indices(s);
    std::vector<std::vector<FieldElement>> restricted;
    for (const auto& v : id.ambient_basis) {
        std::vector<FieldElement> r;
        for (int i : idx) r.push_back(v[i - 1]);
        restricted.push_back(std::move(r));
    }
    auto pivots = field_independent_rows(f, restricted, idx.size());
    REQUIRE(pivots);
    Rat margin(2);
    for (size_t r : *pivots)
        for (size_t q = 0; q < idx.size(); ++q) {
            QInterval e = f.enclose(restricted[r][q], Rat(1));
            margin += 2 * std::max(abs(e.lo), abs(e.hi));
        }
    std::vector<std::vector<FieldElement>> a(idx.size(),
                                             std::vector<FieldElement>(idx.size(), f.zero()));
    std::vector<FieldElement> tau(idx.size());
    for (size_t q = 0; q < idx.size(); ++q) {
        for (size_t r = 0; r < idx.size(); ++r) a[q][r] = restricted[(*pivots)[r]][q];
        const FieldElement& x1 = h1.coords[idx[q] - 1];
        const FieldElement& x2 = h2.coords[idx[q] - 1];
        FieldElement mx = f.sign(f.sub(x1, x2)) >= 0 ? x1 : x2;
        tau[q] = f.add(mx, f.from_rat(margin));
    }
    auto xstar = field_solve(f, a, tau);
    std::vector<Int> rounded(id.coeff_lattice.rows, Int(0));
    for (size_t r = 0; r < idx.size(); ++r) {
        QInterval e = f.enclose(xstar[r], Rat(1, 4));
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), e.lo.get_num().get_mpz_t(), e.lo.get_den().get_mpz_t());
        rounded[(*pivots)[r]] = fl;
    }
    std::vector<Int> coeffs = left_mul(rounded, id.coeff_lattice);
    std::vector<Rat> q(coeffs.begin(), coeffs.end());
    return element_from_coeffs(t, std::move(q));
}

} // namespace

TEST_CASE("validate accepts the fixtures") {
    for (const char* name : {"tensor_ex.json", "lex_z2.json", "zn.json", "strict_quadrant.json",
                             "half_open_half_plane.json", "closed_quadrant.json", "dense_r2.json",
                             "halfline_q.json", "sum_fail.json", "lex_z2_divisible.json"}) {
        CharTriple t = load_fixture(name);
        WellFormedReport rep = validate(t);
        INFO(name);
        CHECK(rep.valid);
    }
}

TEST_CASE("validate rejects a lattice without the empty member") {
    CharTriple t = load_fixture("tensor_ex.json");
    t.faces.members = {t.faces.full()};
    t.faces.strict_.erase(0);
    WellFormedReport rep = validate(t);
    CHECK(!rep.valid);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.rule == "empty-member") found = true;
    CHECK(found);
}

TEST_CASE("validate rejects deficient spanning") {
    CharTriple t = load_fixture("closed_quadrant.json");
    t.generators = {{t.field.from_rat(1), t.field.from_rat(1)}}; // only (1,1)
    WellFormedReport rep = validate(t);
    CHECK(!rep.valid);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.rule == "spanning") found = true;
    CHECK(found);
}

TEST_CASE("ideals of the lexicographic plane") {
    CharTriple t = load_fixture("lex_z2.json");

    IdealData i2 = ideal(t, 0b10);
    REQUIRE(i2.coeff_lattice.rows == 1);
    CHECK(i2.coeff_lattice.at(0, 0) == 0);
    CHECK(i2.coeff_lattice.at(0, 1) == 1);

    CHECK(ideal(t, 0).coeff_lattice.rows == 0);
    CHECK(ideal(t, 0b11).coeff_lattice == IntMatrix::identity(2));

    CHECK_THROWS_AS(ideal(t, 0b01), Error); // {1} is not a member
}

TEST_CASE("positivity") {
    CharTriple tensor = load_fixture("tensor_ex.json");
    CHECK(is_positive(tensor, elem(tensor, {0, 0})));
    CHECK(is_positive(tensor, elem(tensor, {-1, 1}))); // sqrt2 - 1 > 0
    CHECK(!is_positive(tensor, elem(tensor, {1, -1})));

    CharTriple lex = load_fixture("lex_z2.json");
    CHECK(leq(lex, elem(lex, {0, 5}), elem(lex, {1, -100})));
    CHECK(leq(lex, elem(lex, {0, 5}), elem(lex, {0, 5})));

    CharTriple quad = load_fixture("strict_quadrant.json");
    CHECK(!leq(quad, elem(quad, {0, 0}), elem(quad, {1, 0})));
}

TEST_CASE("order units") {
    CharTriple lex = load_fixture("lex_z2.json");
    CHECK(is_order_unit(lex, elem(lex, {1, 0}), 0b11));
    CHECK(!is_order_unit(lex, elem(lex, {0, 1}), 0b11));
    CHECK(is_order_unit(lex, elem(lex, {0, 0}), 0));
}

TEST_CASE("covering pairs") {
    CharTriple lex = load_fixture("lex_z2.json");
    CHECK(covering_pairs(lex) ==
          std::vector<std::pair<uint32_t, uint32_t>>{{0b00, 0b10}, {0b10, 0b11}});

    CharTriple quad = load_fixture("strict_quadrant.json");
    CHECK(covering_pairs(quad) == std::vector<std::pair<uint32_t, uint32_t>>{{0b00, 0b11}});

    CharTriple closed = load_fixture("closed_quadrant.json");
    CHECK(covering_pairs(closed) == std::vector<std::pair<uint32_t, uint32_t>>{
                                        {0b00, 0b01}, {0b00, 0b10}, {0b01, 0b11}, {0b10, 0b11}});
}

TEST_CASE("degeneracy data") {
    CharTriple half = load_fixture("half_open_half_plane.json");
    DegeneracyData d1 = degeneracy(half, 0);
    CHECK(d1.D == 0b01);
    CHECK(d1.rank == 1);
    CHECK(!d1.proper_intersection);

    CharTriple tensor = load_fixture("tensor_ex.json");
    DegeneracyData d2 = degeneracy(tensor, 0);
    CHECK(d2.D == 0b1);
    CHECK(d2.rank == 0);

    CharTriple closed = load_fixture("closed_quadrant.json");
    DegeneracyData d3 = degeneracy(closed, 0);
    CHECK(d3.D == 0b11);
    CHECK(d3.rank == 0);
    CHECK(d3.proper_intersection);
}

TEST_CASE("minimal superideal") {
    CharTriple lex = load_fixture("lex_z2.json");
    CHECK(min_superideal(lex, 0b10) == 0b11);

    CharTriple quad = load_fixture("strict_quadrant.json");
    CHECK(min_superideal(quad, 0) == 0b11);

    CharTriple closed = load_fixture("closed_quadrant.json");
    try {
        min_superideal(closed, 0);
        FAIL("expected ProperIntersection");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ProperIntersection);
    }
}

TEST_CASE("strict cone and unperforation") {
    Rng rng(4242);
    for (const char* name : {"tensor_ex.json", "lex_z2.json", "strict_quadrant.json",
                             "closed_quadrant.json", "half_open_half_plane.json", "dense_r2.json",
                             "lex_z2_divisible.json"}) {
        CharTriple t = load_fixture(name);
        INFO(name);
        for (int iter = 0; iter < 150; ++iter) {
            GroupElement g = random_element(t, rng, 5);
            if (support_mask(t, g) != 0)
                CHECK(!(is_positive(t, g) && is_positive(t, gneg(t, g))));
            for (long k = 2; k <= 5; ++k)
                if (is_positive(t, gscale(t, Rat(k), g))) CHECK(is_positive(t, g));
        }
    }
}

TEST_CASE("ideal membership matches supports and intersections") {
    Rng rng(555);
    for (const char* name : {"lex_z2.json", "closed_quadrant.json", "sum_fail.json"}) {
        CharTriple t = load_fixture(name);
        INFO(name);
        for (uint32_t s1 : t.faces.members) {
            IntMatrix l1 = ideal(t, s1).coeff_lattice;
            for (uint32_t s2 : t.faces.members) {
                IntMatrix l2 = ideal(t, s2).coeff_lattice;
                IntMatrix l12 = ideal(t, s1 & s2).coeff_lattice;
                for (int iter = 0; iter < 20; ++iter) {
                    GroupElement g = random_element(t, rng, 4);
                    std::vector<Int> c(g.coeffs.size());
                    for (size_t j = 0; j < c.size(); ++j) c[j] = g.coeffs[j].get_num();
                    bool in1 = member_with_witness(l1, c).has_value();
                    bool in2 = member_with_witness(l2, c).has_value();
                    bool in12 = member_with_witness(l12, c).has_value();
                    CHECK(in1 == ((support_mask(t, g) & ~s1) == 0));
                    CHECK(in12 == (in1 && in2));
                }
            }
        }
    }
}

TEST_CASE("convexity of ideals, exhaustively on the lexicographic plane") {
    CharTriple lex = load_fixture("lex_z2.json");
    GroupElement g = elem(lex, {0, -3}), h = elem(lex, {0, 5});
    for (long x = -4; x <= 4; ++x)
        for (long y = -6; y <= 6; ++y) {
            GroupElement z = elem(lex, {x, y});
            if (leq(lex, g, z) && leq(lex, z, h)) CHECK((support_mask(lex, z) & ~0b10u) == 0);
        }
}

TEST_CASE("directedness recipe inside ideals") {
    Rng rng(808);
    CharTriple lex = load_fixture("lex_z2.json");
    CharTriple tensor = load_fixture("tensor_ex.json");
    struct Case {
        CharTriple* t;
        uint32_t s;
    } cases[] = {{&lex, 0b10}, {&lex, 0b11}, {&tensor, 0b1}};
    for (auto& c : cases) {
        for (int iter = 0; iter < 25; ++iter) {
            IdealData id = ideal(*c.t, c.s);
            std::vector<Int> r1(id.coeff_lattice.rows), r2(id.coeff_lattice.rows);
            for (auto& v : r1) v = rng.integer(-6, 6);
            for (auto& v : r2) v = rng.integer(-6, 6);
            auto mk = [&](const std::vector<Int>& r) {
                auto cf = left_mul(r, id.coeff_lattice);
                std::vector<Rat> q(cf.begin(), cf.end());
                return element_from_coeffs(*c.t, std::move(q));
            };
            GroupElement h1 = mk(r1), h2 = mk(r2);
            GroupElement up = directed_upper(*c.t, c.s, h1, h2);
            CHECK((support_mask(*c.t, up) & ~c.s) == 0);
            CHECK(is_positive(*c.t, gsub(*c.t, up, h1)));
            CHECK(is_positive(*c.t, gsub(*c.t, up, h2)));
        }
    }
}

TEST_CASE("order units are positive") {
    Rng rng(313);
    for (const char* name : {"lex_z2.json", "closed_quadrant.json", "tensor_ex.json"}) {
        CharTriple t = load_fixture(name);
        for (uint32_t s : t.faces.members) {
            IdealData id = ideal(t, s);
            for (int iter = 0; iter < 30; ++iter) {
                std::vector<Int> r(id.coeff_lattice.rows);
                for (auto& v : r) v = rng.integer(-6, 6);
                auto cf = left_mul(r, id.coeff_lattice);
                std::vector<Rat> q(cf.begin(), cf.end());
                GroupElement g = element_from_coeffs(t, std::move(q));
                if (is_order_unit(t, g, s)) CHECK(is_positive(t, g));
            }
        }
    }
}
