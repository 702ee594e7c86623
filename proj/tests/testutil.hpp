#pragma once

#include <random>
#include <string>

#include "riesz/io.hpp"

namespace riesz::test {

inline CharTriple load_fixture(const std::string& name) {
    return triple_from_json(load_json_file(std::string(RIESZ_FIXTURE_DIR) + "/" + name));
}

inline Field qfield() { return Field(FieldSpec{{Rat(0), Rat(1)}, Rat(0), Rat(0)}); }

inline Field sqrt2_field() {
    return Field(FieldSpec{{Rat(-2), Rat(0), Rat(1)}, Rat(1), Rat(2)});
}

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    Rat rational(long num_mag = 20, long den_max = 10) {
        Rat q(integer(-num_mag, num_mag), integer(1, den_max));
        q.canonicalize();
        return q;
    }
    FieldElement element(const Field& f, long num_mag = 20, long den_max = 10) {
        FieldElement e = f.zero();
        for (auto& c : e.c) c = rational(num_mag, den_max);
        return e;
    }
};

inline GroupElement random_int_element(const CharTriple& t, Rng& rng, long mag) {
    if (t.mode == Mode::VectorSpace) {
        std::vector<FieldElement> c;
        for (int i = 0; i < t.n; ++i) c.push_back(t.field.from_rat(Rat(rng.integer(-mag, mag))));
        return element_from_coords(t, std::move(c));
    }
    std::vector<Rat> c;
    for (size_t j = 0; j < t.gen_count(); ++j) c.push_back(Rat(rng.integer(-mag, mag)));
    return element_from_coeffs(t, std::move(c));
}

// Rejection-samples quadruples a1, a2 <= b1, b2 with coefficients in [-mag, mag].
inline std::vector<Quadruple> sample_quadruples(const CharTriple& t, Rng& rng, long mag,
                                                size_t count) {
    std::vector<Quadruple> out;
    while (out.size() < count) {
        Quadruple q{random_int_element(t, rng, mag), random_int_element(t, rng, mag),
                    random_int_element(t, rng, mag), random_int_element(t, rng, mag)};
        if (leq(t, q.a1, q.b1) && leq(t, q.a1, q.b2) && leq(t, q.a2, q.b1) && leq(t, q.a2, q.b2))
            out.push_back(std::move(q));
    }
    return out;
}

} // namespace riesz::test
