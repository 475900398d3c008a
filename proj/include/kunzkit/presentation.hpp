#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include <kunzkit/exactmath.hpp>
#include <kunzkit/kunzposet.hpp>
#include <kunzkit/semigroup.hpp>

namespace kunzkit {

// A relation between two factorizations of the ground element `at`; `left` is
// the lexicographically greater side.
struct PosetTrade {
    Elt at = 0;
    PosetFactorization left;
    PosetFactorization right;

    bool operator==(const PosetTrade&) const = default;
};

// A connected set of factorizations that evaluate to nil while every
// single-atom step down lands on a finite element, and whose steps down by a
// fixed atom exhaust the full factorization set of that finite element.  All
// members share the residue class `class_element`; `factorizations` is sorted
// lexicographically descending.
struct OuterBetti {
    Elt class_element = 0;
    std::vector<PosetFactorization> factorizations;

    bool operator==(const OuterBetti&) const = default;
};

// A trade template whose multiplicity count is the linear form
// l(x) = sum_i ell_coeffs[i] * x_{atom i} + ell_const: at a Kunz tuple x on
// the face, `left` gains l(x) copies of the multiplicity and `right` gains
// none.  Trades between two finite factorizations carry l == 0; trades built
// from an outer Betti element pair the Apery-side factorization (left) with
// the nil factorization (right), and l(x) >= 1 on the face.
struct ParametricTrade {
    PosetFactorization left;
    PosetFactorization right;
    std::vector<Elt> ell_coeffs;
    Rat ell_const = 0;

    bool operator==(const ParametricTrade&) const = default;
};

// All trades of the minimal presentation of every multiplicity-m semigroup on
// the face, as functions of the Kunz coordinates.
struct ParametricPresentation {
    KunzPoset poset;
    std::vector<ParametricTrade> trades;
};

// One trade per extra connected component of the support-overlap graph on
// each factorization set: the canonical-first member of the leading component
// is paired with the canonical-first member of every later component.
// Ordered by ground element ascending; there are never trades at nil.
std::vector<PosetTrade> minimal_presentation_poset(const KunzPoset& P);

// Ordered by (class_element ascending, leading factorization descending).
std::vector<OuterBetti> outer_betti_elements(const KunzPoset& P);

// One row (left - right) per poset trade, columns labeled by the atoms, rows
// sorted lexicographically ascending.
IntMatrix betti_matrix(const KunzPoset& P);

// Dimension of the face cut out by the poset's relations: #atoms minus the
// rank of the trade matrix.
std::size_t face_dimension(const KunzPoset& P);

// |poset trades| + |outer Betti elements|: the size of a minimal presentation
// of any multiplicity-m numerical semigroup whose Kunz poset is P.
std::size_t presentation_cardinality(const KunzPoset& P);

// Minimal presentation of S in which the multiplicity appears on one side of
// each trade only: the poset trades of its Kunz poset (multiplicity exponent
// zero on both sides) plus one trade per outer Betti element, pairing c
// copies of the multiplicity plus the Apery-side factorization against the
// canonical nil factorization.  Sorted by (element, left side descending).
std::vector<SgTrade> m_centric_presentation(const NumericalSemigroup& S);

// Requires a trivial subgroup (otherwise no semigroup lies on the face).
ParametricPresentation parametric_presentation(const KunzPoset& P);

// Instantiates the presentation at a Kunz tuple lying exactly on the face:
// every relation of the poset binding, every other one strict, and every
// coordinate at least 1.  Output matches m_centric_presentation of the
// semigroup with those Kunz coordinates.
std::vector<SgTrade> evaluate_parametric(const ParametricPresentation& pres, const KunzTuple& x);

// Presentation cardinalities of all faces of the Kunz cone that contain an
// integer point with 1 <= x_i <= max_coord, one face per binding pattern.
std::set<std::size_t> cardinality_spectrum(Elt m, Elt max_coord);

}  // namespace kunzkit
