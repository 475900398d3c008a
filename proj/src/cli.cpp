#include "kunzkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kunzkit/errors.hpp"
#include "kunzkit/jsonio.hpp"
#include "kunzkit/oracle.hpp"

namespace kunzkit {

namespace {

Json parse_inline_array(const std::string& text, const std::string& what) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid JSON in " + what + ": " + e.what());
    }
    if (!j.is_array()) throw UsageError(what + " must be a JSON list of rows");
    return j;
}

// One property of the `check` report.
struct CheckResult {
    std::string name;
    bool pass = false;
};

std::vector<CheckResult> run_checks(const NumericalSemigroup& S) {
    const KunzPoset P = poset_from_apery(S.apery());
    const Face F = face_of_semigroup(S);
    const auto classic = minimal_presentation_classic(S);
    const auto centric = m_centric_presentation(S);

    std::vector<CheckResult> results;
    results.push_back(
        {"face poset equals apery poset", poset_from_face(F.equalities, F.m) == P});
    results.push_back({"dimension by rank equals poset dimension",
                       oracle::dimension_by_rank(F) == static_cast<Elt>(face_dimension(P))});

    bool fibers = true;
    for (const Elt p : P.ground())
        fibers = fibers && oracle::factorizations_brute(P, p) == factorizations_poset(P, p);
    results.push_back({"exhaustive fibers equal cached fibers", fibers});

    results.push_back(
        {"classic presentation connects all fibers", oracle::check_presentation(S, classic)});
    results.push_back(
        {"m-centric presentation connects all fibers", oracle::check_presentation(S, centric)});
    results.push_back(
        {"evaluated parametric presentation equals the m-centric one",
         evaluate_parametric(parametric_presentation(P), kunz_of_apery(S.apery())) == centric});
    results.push_back({"presentation cardinalities agree",
                       classic.size() == centric.size() &&
                           classic.size() == presentation_cardinality(P)});

    bool minimal = true;
    for (std::size_t drop = 0; drop < centric.size(); ++drop) {
        std::vector<SgTrade> pruned;
        for (std::size_t i = 0; i < centric.size(); ++i)
            if (i != drop) pruned.push_back(centric[i]);
        minimal = minimal && !oracle::check_presentation(S, pruned);
    }
    results.push_back({"no single trade is redundant", minimal});
    return results;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of numerical semigroups and of the faces of the Kunz polyhedron"};
    app.name("kunzkit");
    app.require_subcommand(1);

    std::string format = "json";
    long long seed = 0;
    std::string input;
    Elt element_class = 0;
    Elt flag_m = 0;
    std::string hyperplanes_text;
    Elt bound = 10;
    Elt max_coord = 0;
    int status = 0;

    const auto emit = [&](const Json& j) {
        if (format == "dot") throw UsageError("dot output is only available for `poset`");
        out << (format == "text" ? j.dump(2) : j.dump()) << "\n";
    };
    const auto load_semigroup = [&] { return semigroup_from_json(load_input(input)); };

    // Poset from the positional input or from --m/--hyperplanes; exactly one.
    const auto poset_source = [&](const CLI::App* sub) -> KunzPoset {
        const bool flags = sub->count("--m") > 0 || sub->count("--hyperplanes") > 0;
        if (!input.empty() && flags)
            throw UsageError("give either an input argument or --m/--hyperplanes, not both");
        if (!input.empty()) return poset_from_json(load_input(input));
        if (sub->count("--m") == 0 || sub->count("--hyperplanes") == 0)
            throw UsageError("an input argument or both --m and --hyperplanes are required");
        return poset_from_json(
            Json{{"m", flag_m},
                 {"hyperplanes", parse_inline_array(hyperplanes_text, "--hyperplanes")}});
    };
    const auto face_source = [&](const CLI::App* sub) -> Face {
        const bool flags = sub->count("--m") > 0 || sub->count("--hyperplanes") > 0;
        if (!input.empty() && flags)
            throw UsageError("give either an input argument or --m/--hyperplanes, not both");
        if (!input.empty()) return face_from_json(load_input(input));
        if (sub->count("--m") == 0 || sub->count("--hyperplanes") == 0)
            throw UsageError("an input argument or both --m and --hyperplanes are required");
        return face_from_json(
            Json{{"m", flag_m},
                 {"equalities", parse_inline_array(hyperplanes_text, "--hyperplanes")}});
    };

    const auto add_input = [&](CLI::App* sub, const char* help) {
        sub->add_option("input", input, help);
    };
    const auto add_matrix_flags = [&](CLI::App* sub) {
        sub->add_option("--m", flag_m, "modulus of the group cone");
        sub->add_option("--hyperplanes", hyperplanes_text,
                        "equality rows as a JSON list of lists");
    };

    auto* apery = app.add_subcommand("apery", "Apéry set of a numerical semigroup");
    add_input(apery, "semigroup: {\"generators\": …} | {\"m\", \"kunz\"} | {\"m\", \"apery\"} | \"6,7,8,9\"");
    apery->callback([&] { emit(json_of(load_semigroup().apery())); });

    auto* kunz = app.add_subcommand("kunz", "Kunz coordinates of a numerical semigroup");
    add_input(kunz, "semigroup input");
    kunz->callback([&] { emit(json_of(kunz_of_apery(load_semigroup().apery()))); });

    auto* poset = app.add_subcommand("poset", "Kunz poset of a semigroup or face");
    add_input(poset, "poset: semigroup input | {\"m\", \"hyperplanes\"} | {\"m\", \"covers\"}");
    poset->callback([&] {
        const KunzPoset P = poset_from_json(load_input(input));
        if (format == "dot")
            out << to_dot(P);
        else
            emit(json_of(P));
    });

    auto* fact = app.add_subcommand("factorizations", "factorization fiber of one element class");
    add_input(fact, "poset input");
    fact->add_option("--element-class", element_class, "residue class to factor")->required();
    fact->callback(
        [&] { emit(Json(factorizations_poset(poset_from_json(load_input(input)), element_class))); });

    auto* minpres_poset = app.add_subcommand("minpres-poset", "minimal presentation of a Kunz poset");
    add_input(minpres_poset, "poset input");
    minpres_poset->callback(
        [&] { emit(json_of(minimal_presentation_poset(poset_from_json(load_input(input))))); });

    auto* outer = app.add_subcommand("outer-betti", "outer Betti elements of a Kunz poset");
    add_input(outer, "poset input");
    outer->callback(
        [&] { emit(json_of(outer_betti_elements(poset_from_json(load_input(input))))); });

    auto* betti = app.add_subcommand("betti-matrix", "trade vectors of the minimal presentation");
    add_input(betti, "poset input");
    add_matrix_flags(betti);
    betti->callback([&] { emit(json_of(betti_matrix(poset_source(betti)))); });

    auto* dimension = app.add_subcommand("dimension", "dimension of the face of a Kunz poset");
    add_input(dimension, "poset input");
    add_matrix_flags(dimension);
    dimension->callback([&] { emit(Json(face_dimension(poset_source(dimension)))); });

    auto* minpres = app.add_subcommand("minpres", "minimal presentation over the generators");
    add_input(minpres, "semigroup input");
    minpres->callback([&] { emit(json_of(m_centric_presentation(load_semigroup()))); });

    auto* parametric = app.add_subcommand(
        "parametric", "presentation of every multiplicity-m semigroup on a face, as functions of x");
    add_input(parametric, "poset input");
    parametric->callback(
        [&] { emit(json_of(parametric_presentation(poset_from_json(load_input(input))))); });

    auto* find = app.add_subcommand("find-semigroup", "search a face for a numerical semigroup");
    add_input(find, "face: {\"m\", \"equalities\"}");
    add_matrix_flags(find);
    find->add_option("--bound", bound, "kernel-coefficient search radius (default 10)");
    find->callback([&] { emit(json_of(find_semigroup_on_face(face_source(find), bound))); });

    auto* check = app.add_subcommand("check", "run every brute-force oracle against a semigroup");
    add_input(check, "semigroup input");
    check->callback([&] {
        const auto results = run_checks(load_semigroup());
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        if (format == "text") {
            for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
            out << (all ? "all checks passed" : "some checks FAILED") << "\n";
        } else {
            Json props = Json::array();
            for (const auto& r : results) props.push_back({{"name", r.name}, {"pass", r.pass}});
            emit(Json{{"properties", std::move(props)}, {"all", all}});
        }
        if (!all) status = 1;
    });

    auto* enumerate = app.add_subcommand("enumerate-cardinalities",
                                         "presentation cardinalities over all Kunz tuples with "
                                         "coordinates in [1, max-coord]");
    enumerate->add_option("--m", flag_m, "modulus of the group cone")->required();
    enumerate->add_option("--max-coord", max_coord, "coordinate bound")->required();
    enumerate->callback([&] {
        const auto spectrum = cardinality_spectrum(flag_m, max_coord);
        emit(Json(std::vector<std::size_t>(spectrum.begin(), spectrum.end())));
    });

    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--format", format, "output format (default json)")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--seed", seed, "reserved; every algorithm is deterministic");
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace kunzkit
