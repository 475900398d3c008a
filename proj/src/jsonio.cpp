#include "kunzkit/jsonio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "kunzkit/errors.hpp"

namespace kunzkit {

namespace {

bool looks_like_generators(const std::string& s) {
    bool digit_seen = false;
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digit_seen = true;
        else if (c != ',' && c != ' ')
            return false;
    }
    return digit_seen;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid JSON in " + origin + ": " + e.what());
    }
}

Elt int_field(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw UsageError("expected an integer field \"" + key + "\"");
    return j[key].get<Elt>();
}

std::vector<Elt> int_array_field(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw UsageError("expected an array field \"" + key + "\"");
    std::vector<Elt> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw UsageError("field \"" + key + "\" must contain only integers");
        out.push_back(v.get<Elt>());
    }
    return out;
}

Json json_of_factorizations(const std::vector<PosetFactorization>& zs) {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back(z);
    return out;
}

}  // namespace

Json load_input(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, "argument");
    if (looks_like_generators(arg)) {
        std::vector<Elt> gens;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" ") == std::string::npos)
                throw UsageError("empty entry in generator list \"" + arg + "\"");
            gens.push_back(std::stoll(item));
        }
        return Json{{"generators", gens}};
    }
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read input file \"" + arg + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), "file \"" + arg + "\"");
}

NumericalSemigroup semigroup_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("semigroup input must be a JSON object");
    if (j.contains("generators")) return normalize(int_array_field(j, "generators"));
    if (j.contains("kunz"))
        return semigroup_of_kunz(KunzTuple{int_field(j, "m"), int_array_field(j, "kunz")});
    if (j.contains("apery"))
        return semigroup_of_kunz(
            kunz_of_apery(AperyTuple{int_field(j, "m"), int_array_field(j, "apery")}));
    throw UsageError("semigroup input needs \"generators\", \"kunz\", or \"apery\"");
}

KunzPoset poset_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("poset input must be a JSON object");
    if (j.contains("hyperplanes")) {
        const Elt m = int_field(j, "m");
        if (m < 1) throw NotAFace("multiplicity must be at least 1");
        return poset_from_face(matrix_from_json(j["hyperplanes"], static_cast<std::size_t>(m) - 1),
                               m);
    }
    if (j.contains("covers")) {
        const Elt m = int_field(j, "m");
        if (!j["covers"].is_array()) throw UsageError("expected an array field \"covers\"");
        std::vector<std::pair<Elt, Elt>> covers;
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                !c[1].is_number_integer())
                throw UsageError("each cover must be a pair [lower, upper]");
            covers.emplace_back(c[0].get<Elt>(), c[1].get<Elt>());
        }
        return poset_from_covers(m, covers);
    }
    return poset_from_apery(semigroup_from_json(j).apery());
}

Face face_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("equalities"))
        throw UsageError("face input needs \"m\" and \"equalities\"");
    const Elt m = int_field(j, "m");
    if (m < 1) throw NotAFace("multiplicity must be at least 1");
    return Face{m, matrix_from_json(j["equalities"], static_cast<std::size_t>(m) - 1)};
}

IntMatrix matrix_from_json(const Json& rows, std::size_t cols) {
    if (!rows.is_array()) throw UsageError("a matrix must be a list of rows");
    std::vector<IntVector> parsed;
    for (const auto& row : rows) {
        if (!row.is_array()) throw UsageError("each matrix row must be a list of integers");
        if (row.size() != cols)
            throw DimensionMismatch("matrix rows need " + std::to_string(cols) +
                                    " entries, got " + std::to_string(row.size()));
        IntVector r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw UsageError("each matrix row must be a list of integers");
            r.push_back(Int(v.get<long long>()));
        }
        parsed.push_back(std::move(r));
    }
    return IntMatrix::from_rows(parsed, cols);
}

Json json_of(const AperyTuple& a) { return Json{{"m", a.m}, {"apery", a.values}}; }

Json json_of(const KunzTuple& x) { return Json{{"m", x.m}, {"kunz", x.values}}; }

Json json_of(const KunzPoset& P) {
    Json covers = Json::array();
    for (const auto& c : P.covers()) covers.push_back({c.lower, c.upper, c.label});
    return Json{{"atoms", P.atoms()}, {"covers", covers}, {"subgroup", P.subgroup()}};
}

Json json_of(const IntMatrix& M) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_of(const std::vector<SgTrade>& trades) {
    Json out = Json::array();
    for (const auto& t : trades)
        out.push_back({{"at", t.at}, {"left", t.left}, {"right", t.right}});
    return out;
}

Json json_of(const std::vector<PosetTrade>& trades) {
    Json out = Json::array();
    for (const auto& t : trades)
        out.push_back({{"at", t.at}, {"left", t.left}, {"right", t.right}});
    return out;
}

Json json_of(const std::vector<OuterBetti>& outer) {
    Json out = Json::array();
    for (const auto& b : outer)
        out.push_back(
            {{"class", b.class_element}, {"factorizations", json_of_factorizations(b.factorizations)}});
    return out;
}

Json json_of(const ParametricPresentation& pres) {
    const auto& atoms = pres.poset.atoms();
    Json trades = Json::array();
    for (const auto& t : pres.trades) {
        Elt sum = 0;
        Json coeffs = Json::object();
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            sum += t.left[i] * atoms[i];
            coeffs[std::to_string(atoms[i])] = t.ell_coeffs[i];
        }
        trades.push_back({{"at", pres.poset.rep(sum % pres.poset.m())},
                          {"left", t.left},
                          {"right", t.right},
                          {"ell_coeffs", std::move(coeffs)},
                          {"ell_const", t.ell_const.str()}});
    }
    return Json{{"m", pres.poset.m()}, {"trades", std::move(trades)}};
}

Json json_of(const FindSemigroupResult& res) {
    Json out;
    switch (res.kind) {
        case FindSemigroupResult::Kind::Found:
            out["verdict"] = "found";
            out["generators"] = res.semigroup->generators();
            break;
        case FindSemigroupResult::Kind::ProvablyNone: {
            out["verdict"] = "provably-none";
            Json witness = Json::array();
            for (const auto& v : res.witness) witness.push_back(v.convert_to<long long>());
            out["witness"] = std::move(witness);
            break;
        }
        case FindSemigroupResult::Kind::NoneWithinBound:
            out["verdict"] = "none-within-bound";
            break;
    }
    out["reason"] = res.reason;
    return out;
}

}  // namespace kunzkit
