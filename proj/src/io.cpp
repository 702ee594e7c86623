#include "riesz/io.hpp"

#include <fstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

Rat rat_from_json(const json& j) {
    if (!j.is_string()) fail(Errc::ParseError, "rational values must be strings");
    return parse_rat(j.get<std::string>());
}

json mask_to_json(uint32_t mask) { return json(mask_to_indices(mask)); }

uint32_t mask_from_json(const json& j, int n) {
    if (!j.is_array()) fail(Errc::ParseError, "index sets must be arrays");
    std::vector<int> idx;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(Errc::ParseError, "index sets hold integers");
        idx.push_back(v.get<int>());
    }
    return indices_to_mask(idx, n);
}

json felem_to_json(const FieldElement& e) {
    json arr = json::array();
    for (const auto& q : e.c) arr.push_back(format_rat(q));
    return arr;
}

FieldElement felem_from_json(const json& j, int degree) {
    if (!j.is_array() || static_cast<int>(j.size()) != degree)
        fail(Errc::ParseError, "field elements are arrays of degree-many rationals");
    FieldElement e;
    for (const auto& v : j) e.c.push_back(rat_from_json(v));
    return e;
}

} // namespace

json field_spec_to_json(const FieldSpec& spec) {
    json mp = json::array();
    for (const auto& q : spec.min_poly) mp.push_back(format_rat(q));
    return json{{"min_poly", mp},
                {"root_interval", json::array({format_rat(spec.lo), format_rat(spec.hi)})}};
}

FieldSpec field_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_poly") || !j["min_poly"].is_array())
        fail(Errc::ParseError, "field spec needs a min_poly array");
    FieldSpec spec;
    for (const auto& v : j["min_poly"]) spec.min_poly.push_back(rat_from_json(v));
    if (spec.min_poly.size() < 2) fail(Errc::ParseError, "min_poly needs degree >= 1");
    spec.lo = 0;
    spec.hi = 0;
    if (j.contains("root_interval")) {
        const auto& ri = j["root_interval"];
        if (!ri.is_array() || ri.size() != 2)
            fail(Errc::ParseError, "root_interval is a two-element array");
        spec.lo = rat_from_json(ri[0]);
        spec.hi = rat_from_json(ri[1]);
    } else if (spec.min_poly.size() > 2) {
        fail(Errc::ParseError, "root_interval required for degree >= 2");
    }
    return spec;
}

json triple_to_json(const CharTriple& t) {
    json gens = json::array();
    for (const auto& g : t.generators) {
        json vec = json::array();
        for (const auto& e : g) vec.push_back(felem_to_json(e));
        gens.push_back(vec);
    }
    json lattice = json::array();
    for (uint32_t s : t.faces.members) {
        json entry{{"S", mask_to_json(s)}};
        uint32_t strict = t.faces.strict_of(s);
        if (s != 0 || strict != 0) entry["P"] = mask_to_json(strict);
        lattice.push_back(entry);
    }
    return json{{"n", t.n},
                {"mode", mode_name(t.mode)},
                {"field", field_spec_to_json(t.field.spec())},
                {"generators", gens},
                {"lattice", lattice}};
}

CharTriple triple_from_json(const json& j, long bisection_cap) {
    if (!j.is_object()) fail(Errc::ParseError, "triple must be a JSON object");
    for (const char* key : {"n", "mode", "field", "lattice"})
        if (!j.contains(key)) fail(Errc::ParseError, std::string("triple misses '") + key + "'");
    if (!j["n"].is_number_integer()) fail(Errc::ParseError, "n must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > 30) fail(Errc::ParseError, "n must be in 1..30");
    Mode mode = mode_from_name(j["mode"].get<std::string>());
    Field field(field_spec_from_json(j["field"]), bisection_cap);
    int d = field.degree();

    std::vector<std::vector<FieldElement>> gens;
    if (mode != Mode::VectorSpace) {
        if (!j.contains("generators") || !j["generators"].is_array())
            fail(Errc::ParseError, "triple misses a generators array");
        for (const auto& gj : j["generators"]) {
            if (!gj.is_array() || static_cast<int>(gj.size()) != n)
                fail(Errc::ParseError, "each generator is an array of n field elements");
            std::vector<FieldElement> g;
            for (const auto& ej : gj) g.push_back(felem_from_json(ej, d));
            gens.push_back(std::move(g));
        }
        if (gens.empty()) fail(Errc::ParseError, "at least one generator required");
    }

    FaceLattice fl;
    fl.n = n;
    if (!j["lattice"].is_array()) fail(Errc::ParseError, "lattice must be an array");
    for (const auto& entry : j["lattice"]) {
        if (!entry.is_object() || !entry.contains("S"))
            fail(Errc::ParseError, "lattice entries are objects with an 'S' array");
        uint32_t s = mask_from_json(entry["S"], n);
        uint32_t p = entry.contains("P") ? mask_from_json(entry["P"], n) : 0;
        if (fl.strict_.count(s)) fail(Errc::ParseError, "duplicate lattice member " + mask_str(s));
        fl.members.push_back(s);
        fl.strict_[s] = p;
    }
    std::sort(fl.members.begin(), fl.members.end());
    return CharTriple{std::move(field), n, mode, std::move(gens), std::move(fl)};
}

json element_to_json(const CharTriple& t, const GroupElement& g) {
    json arr = json::array();
    if (t.mode == Mode::VectorSpace) {
        for (const auto& e : g.coords) arr.push_back(felem_to_json(e));
    } else {
        for (const auto& q : g.coeffs) arr.push_back(format_rat(q));
    }
    return arr;
}

GroupElement element_from_json(const CharTriple& t, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "elements are arrays");
    if (t.mode == Mode::VectorSpace) {
        std::vector<FieldElement> coords;
        for (const auto& v : j) coords.push_back(felem_from_json(v, t.field.degree()));
        return element_from_coords(t, std::move(coords));
    }
    std::vector<Rat> coeffs;
    for (const auto& v : j) coeffs.push_back(rat_from_json(v));
    return element_from_coeffs(t, std::move(coeffs));
}

Quadruple quadruple_from_json(const CharTriple& t, const json& j) {
    if (!j.is_object()) fail(Errc::ParseError, "quadruple must be a JSON object");
    for (const char* key : {"a1", "a2", "b1", "b2"})
        if (!j.contains(key)) fail(Errc::ParseError, std::string("quadruple misses '") + key + "'");
    return Quadruple{element_from_json(t, j["a1"]), element_from_json(t, j["a2"]),
                     element_from_json(t, j["b1"]), element_from_json(t, j["b2"])};
}

json report_to_json(const WellFormedReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back(json{{"rule", v.rule}, {"detail", v.detail}});
    return json{{"valid", rep.valid}, {"violations", violations}};
}

namespace {

json verdict_to_json(const Verdict& v) {
    json out{{"checked", v.checked}, {"pass", v.pass}};
    if (v.witness) {
        out["witness"] = json{{"S1", mask_to_json(v.witness->s1)},
                              {"S2", mask_to_json(v.witness->s2)},
                              {"detail", v.witness->detail}};
    }
    return out;
}

} // namespace

json report_to_json(const ConditionReport& rep) {
    return json{{"mode", mode_name(rep.mode)},
                {"conditions", json{{"i", verdict_to_json(rep.c1)},
                                    {"ii", verdict_to_json(rep.c2)},
                                    {"iii", verdict_to_json(rep.c3)},
                                    {"iv", verdict_to_json(rep.c4)}}},
                {"overall", rep.overall}};
}

json result_to_json(const CharTriple& t, const InterpolationResult& res) {
    const auto& tr = res.trace;
    json coords = json::array();
    for (const auto& e : res.z.coords) coords.push_back(felem_to_json(e));
    return json{{"z", element_to_json(t, res.z)},
                {"z_coords", coords},
                {"trace", json{{"T11", mask_to_json(tr.t11)},
                               {"T12", mask_to_json(tr.t12)},
                               {"T21", mask_to_json(tr.t21)},
                               {"T22", mask_to_json(tr.t22)},
                               {"R", mask_to_json(tr.r)},
                               {"Rhat", mask_to_json(tr.rhat)},
                               {"g1", element_to_json(t, tr.g1)},
                               {"g2", element_to_json(t, tr.g2)},
                               {"c", element_to_json(t, tr.c)},
                               {"m", element_to_json(t, tr.m)},
                               {"retries", tr.retries}}}};
}

json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json members = json::array(), pgeq = json::array();
        for (const auto& [s, p] : e.canon) {
            members.push_back(mask_to_json(s));
            pgeq.push_back(mask_to_json(p));
        }
        arr.push_back(json{{"n", e.n}, {"members", members}, {"pgeq", pgeq}, {"orbit", e.orbit}});
    }
    return arr;
}

json canon_to_json(const CanonEncoding& enc) {
    json members = json::array(), pgeq = json::array();
    for (const auto& [s, p] : enc) {
        members.push_back(mask_to_json(s));
        pgeq.push_back(mask_to_json(p));
    }
    return json{{"members", members}, {"pgeq", pgeq}};
}

json equiv_to_json(const CharTriple& t1, const EquivResult& res) {
    json out;
    switch (res.verdict) {
    case EquivVerdict::Yes: out["verdict"] = "yes"; break;
    case EquivVerdict::No: out["verdict"] = "no"; break;
    case EquivVerdict::Unknown: out["verdict"] = "unknown"; break;
    }
    if (!res.note.empty()) out["note"] = res.note;
    if (res.witness) {
        json w{{"sigma", res.witness->sigma}};
        json phi = json::array();
        for (const auto& row : res.witness->phi) {
            json r = json::array();
            for (const auto& e : row) r.push_back(felem_to_json(e));
            phi.push_back(r);
        }
        w["phi"] = phi;
        if (res.witness->u) {
            json u = json::array();
            for (size_t i = 0; i < res.witness->u->rows; ++i) {
                json row = json::array();
                for (size_t j = 0; j < res.witness->u->cols; ++j)
                    row.push_back(res.witness->u->at(i, j).get_str());
                u.push_back(row);
            }
            w["U"] = u;
        }
        out["witness"] = w;
    }
    (void)t1;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

} // namespace riesz
