#pragma once

#include <optional>
#include <string>

#include <kunzkit/exactmath.hpp>
#include <kunzkit/semigroup.hpp>

namespace kunzkit {

// A face of the group cone for Z_m: the points where every row of
// `equalities` vanishes.  Rows are facet forms e_i + e_j - e_{(i+j) mod m} in
// group-cone coordinates, or combinations of them.
struct Face {
    Elt m;
    IntMatrix equalities;
};

enum class FacePosition { Interior, Boundary, Off };

// The face whose relative interior contains apery(S): one row per pair
// (i, j), i <= j, i + j != 0 mod m, with a_i + a_j = a_{i+j}, in ascending
// pair order.
Face face_of_semigroup(const NumericalSemigroup& S);

// Interior: all equality rows vanish and every facet form outside their span
// is strictly positive.  Boundary: rows vanish but some outside form does
// too.  Off: a row fails to vanish or some facet form is negative.
FacePosition on_face(const Face& F, const AperyTuple& a);
FacePosition on_face(const Face& F, const KunzTuple& x);

struct FindSemigroupResult {
    enum class Kind { Found, ProvablyNone, NoneWithinBound };

    Kind kind = Kind::NoneWithinBound;
    std::optional<NumericalSemigroup> semigroup;  // set when Found
    IntVector witness;                            // span certificate when ProvablyNone
    std::string reason;
};

// Searches for a numerical semigroup whose Apery tuple lies in the relative
// interior of F.  First certifies impossibility when the rowspan contains
// some e_h (the class h is pinned to zero) or some e_i - e_j (two distinct
// residues forced equal), scanning single indices ascending and then pairs in
// ascending lexicographic order; the first witness found is reported.
// Otherwise walks integer points a0 + m * (c_1 b_1 + ... + c_d b_d) over the
// kernel basis of the equalities, by shells of max |c_i| up to `bound`,
// returning the first point that is strictly positive and Interior.  Running
// out of shells yields NoneWithinBound, which is not a proof of emptiness.
FindSemigroupResult find_semigroup_on_face(const Face& F, Elt bound);

}  // namespace kunzkit
