#include <CLI11.hpp>

#include <iostream>

#include "riesz/errors.hpp"
#include "riesz/io.hpp"

using namespace riesz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNegative = 3;
constexpr int kExitNotComparable = 4;
constexpr int kExitTooLarge = 5;
constexpr int kExitUnknown = 6;
constexpr int kExitResource = 7;

int exit_code_for(Errc c) {
    switch (c) {
    case Errc::NotComparable: return kExitNotComparable;
    case Errc::TooLarge: return kExitTooLarge;
    case Errc::ConditionsFail: return kExitNegative;
    case Errc::PrecisionCap:
    case Errc::SearchBudget:
    case Errc::NotDense:
    case Errc::InternalProofGap: return kExitResource;
    default: return kExitParse;
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    long precision_cap = kDefaultBisectionCap;
    long long search_budget = kDefaultSearchBudget;
    unsigned long seed = 0;
};

// Loads and validates; prints the report and exits 2 when invalid.
CharTriple load_triple(const std::string& path, const Options& opt) {
    CharTriple t = triple_from_json(load_json_file(path), opt.precision_cap);
    WellFormedReport rep = validate(t);
    if (!rep.valid) {
        emit(report_to_json(rep));
        std::exit(kExitInvalid);
    }
    return t;
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Riesz interpolation on characterizing triples"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--precision-cap", opt.precision_cap, "bisection depth cap for sign decisions");
    app.add_option("--search-budget", opt.search_budget, "node budget for dense approximation");
    app.add_option("--seed", opt.seed, "seed for randomized harness generation");

    std::string file, file2, quad_file, ideal_spec, coords_spec;
    long bound = 10, budget = 3;
    int dim = 1;

    auto* c_validate = app.add_subcommand("validate", "check triple well-formedness");
    c_validate->add_option("file", file)->required();

    auto* c_check = app.add_subcommand("check", "decide Riesz interpolation");
    c_check->add_option("file", file)->required();

    auto* c_interp = app.add_subcommand("interpolate", "construct an interpolant");
    c_interp->add_option("file", file)->required();
    c_interp->add_option("quadruple", quad_file)->required();

    auto* c_oracle = app.add_subcommand("oracle", "brute-force interpolant search");
    c_oracle->add_option("file", file)->required();
    c_oracle->add_option("quadruple", quad_file)->required();
    c_oracle->add_option("--bound", bound, "coefficient bound");

    auto* c_density = app.add_subcommand("density", "decide density of an ideal projection");
    c_density->add_option("file", file)->required();
    c_density->add_option("--ideal", ideal_spec, "member set, comma-separated 1-based indices");
    c_density->add_option("--coords", coords_spec, "projection coordinates");

    auto* c_classify = app.add_subcommand("classify", "enumerate interpolation vector spaces");
    c_classify->add_option("n", dim)->required();

    auto* c_canon = app.add_subcommand("canon", "canonical form of a triple's face data");
    c_canon->add_option("file", file)->required();

    auto* c_equiv = app.add_subcommand("equiv", "bounded equivalence of two triples");
    c_equiv->add_option("file1", file)->required();
    c_equiv->add_option("file2", file2)->required();
    c_equiv->add_option("--budget", budget, "entry bound for the change-of-basis search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            CharTriple t = triple_from_json(load_json_file(file), opt.precision_cap);
            WellFormedReport rep = validate(t);
            emit(report_to_json(rep));
            return rep.valid ? kExitOk : kExitInvalid;
        }
        if (c_check->parsed()) {
            CharTriple t = load_triple(file, opt);
            ConditionReport rep = check_all(t);
            emit(report_to_json(rep));
            return rep.overall ? kExitOk : kExitNegative;
        }
        if (c_interp->parsed()) {
            CharTriple t = load_triple(file, opt);
            Quadruple q = quadruple_from_json(t, load_json_file(quad_file));
            InterpolationResult res = interpolant(t, q.a1, q.a2, q.b1, q.b2, opt.search_budget);
            emit(result_to_json(t, res));
            return kExitOk;
        }
        if (c_oracle->parsed()) {
            CharTriple t = load_triple(file, opt);
            Quadruple q = quadruple_from_json(t, load_json_file(quad_file));
            auto z = oracle_search(t, q.a1, q.a2, q.b1, q.b2, bound);
            json out{{"found", z.has_value()}};
            if (z) out["z"] = element_to_json(t, *z);
            emit(out);
            return z ? kExitOk : kExitNegative;
        }
        if (c_density->parsed()) {
            CharTriple t = load_triple(file, opt);
            uint32_t s = ideal_spec.empty() ? t.faces.full()
                                            : indices_to_mask(parse_index_list(ideal_spec), t.n);
            uint32_t coords =
                coords_spec.empty() ? s : indices_to_mask(parse_index_list(coords_spec), t.n);
            bool dense = is_dense_projection(t, s, coords);
            emit(json{{"ideal", json(mask_to_indices(s))},
                      {"coords", json(mask_to_indices(coords))},
                      {"dense", dense}});
            return dense ? kExitOk : kExitNegative;
        }
        if (c_classify->parsed()) {
            auto entries = enumerate_Dn(dim);
            emit(catalog_to_json(entries));
            return kExitOk;
        }
        if (c_canon->parsed()) {
            CharTriple t = load_triple(file, opt);
            emit(canon_to_json(canon_form(t.faces)));
            return kExitOk;
        }
        if (c_equiv->parsed()) {
            CharTriple t1 = load_triple(file, opt);
            CharTriple t2 = load_triple(file2, opt);
            EquivResult res = equivalent_triple(t1, t2, budget);
            emit(equiv_to_json(t1, res));
            switch (res.verdict) {
            case EquivVerdict::Yes: return kExitOk;
            case EquivVerdict::No: return kExitNegative;
            case EquivVerdict::Unknown: return kExitUnknown;
            }
        }
    } catch (const Error& e) {
        emit(json{{"error", errc_name(e.code())}, {"message", e.what()}});
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        emit(json{{"error", "Internal"}, {"message", e.what()}});
        return kExitParse;
    }
    return kExitParse;
}
