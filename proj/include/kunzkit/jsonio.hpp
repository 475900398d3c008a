#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <kunzkit/facetools.hpp>
#include <kunzkit/kunzposet.hpp>
#include <kunzkit/presentation.hpp>
#include <kunzkit/semigroup.hpp>

namespace kunzkit {

using Json = nlohmann::json;

// Malformed command-line input: unreadable file, invalid JSON, or a JSON
// object that matches no documented schema.  The CLI maps this to exit 2,
// keeping it distinct from DomainError (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resolves a positional input argument: inline JSON if it starts with '{',
// the shorthand "6,7,8,9" rewritten to {"generators": [6,7,8,9]}, otherwise
// a path to a JSON file.
Json load_input(const std::string& arg);

// {"generators": [...]} | {"m": ..., "kunz": [...]} | {"m": ..., "apery": [...]}
NumericalSemigroup semigroup_from_json(const Json& j);

// {"m": ..., "hyperplanes": [[...]]} | {"m": ..., "covers": [[a, b], ...]} |
// any semigroup schema.
KunzPoset poset_from_json(const Json& j);

// {"m": ..., "equalities": [[...]]}
Face face_from_json(const Json& j);

// Row-list matrix with the given column count (group-cone coordinates).
IntMatrix matrix_from_json(const Json& rows, std::size_t cols);

Json json_of(const AperyTuple& a);
Json json_of(const KunzTuple& x);
Json json_of(const KunzPoset& P);
Json json_of(const IntMatrix& M);
Json json_of(const std::vector<SgTrade>& trades);
Json json_of(const std::vector<PosetTrade>& trades);
Json json_of(const std::vector<OuterBetti>& outer);
Json json_of(const ParametricPresentation& pres);
Json json_of(const FindSemigroupResult& res);

}  // namespace kunzkit
