#pragma once

#include <string>
#include <utility>
#include <vector>

#include <kunzkit/exactmath.hpp>
#include <kunzkit/semigroup.hpp>

namespace kunzkit {

// Exponent vector (z_1, ..., z_k) over the atoms of a Kunz poset.
using PosetFactorization = std::vector<Elt>;

// Hasse-diagram edge: `upper` covers `lower`; label = (upper - lower) mod m,
// always an atom.
struct CoverRelation {
    Elt lower = 0;
    Elt upper = 0;
    Elt label = 0;

    bool operator==(const CoverRelation&) const = default;
    auto operator<=>(const CoverRelation&) const = default;
};

// Partial order on Z_m / H induced by the equalities of a face of the group
// cone: a ⪯ b iff x_a + x_{b-a} = x_b holds on the whole face.  Also acts as
// the Kunz nilsemigroup (ground ∪ {∞}, ⊕) via nil_add.  Immutable; the
// factorization sets Z_P(p) are computed bottom-up at construction.
class KunzPoset {
public:
    // Sentinel for the nilsemigroup's absorbing element ∞.
    static constexpr Elt nil = -1;

    Elt m() const { return m_; }
    // Kunz subgroup H, sorted, always containing 0.
    const std::vector<Elt>& subgroup() const { return subgroup_; }
    // Smallest representative of each coset of H, sorted; ground().front() = 0.
    const std::vector<Elt>& ground() const { return ground_; }
    // Elements covering 0, ascending.
    const std::vector<Elt>& atoms() const { return atoms_; }
    // Hasse diagram, sorted by (lower, upper).
    const std::vector<CoverRelation>& covers() const { return covers_; }

    // Canonical representative of the coset of any integer residue.
    Elt rep(Elt residue) const;
    // ā ⪯ b̄; arguments may be arbitrary residues.
    bool leq(Elt a, Elt b) const;

    // ā ⊕ b̄ = (a+b)-bar when ā ⪯ (a+b)-bar, else ∞; nil absorbs.
    Elt nil_add(Elt a, Elt b) const;
    // Fold of ⊕ over z_i copies of the i-th atom (order-independent).
    Elt evaluate(const PosetFactorization& z) const;

    // Z_P(p), lexicographically descending.  p may be any residue; ground
    // representatives index the cache.
    const std::vector<PosetFactorization>& factorizations(Elt p) const;

    std::vector<Elt> maximal_elements() const;
    // e(S) = #atoms + 1 and t(S) = #maximal elements for any semigroup on the
    // face; both throw NotSemigroupFace when the subgroup is nontrivial.
    std::size_t embedding_dimension() const;
    std::size_t type() const;

    bool operator==(const KunzPoset& other) const;

private:
    friend KunzPoset poset_from_apery(const AperyTuple& a);
    friend KunzPoset poset_from_face(const IntMatrix& H, Elt m);
    friend KunzPoset poset_from_covers(Elt m, const std::vector<std::pair<Elt, Elt>>& covers);
    KunzPoset() = default;

    std::size_t index(Elt ground_value) const;
    // Validates the order axioms, derives covers/atoms, enforces the
    // cover ⇔ atom-difference law, and fills the factorization cache.
    void finalize();

    Elt m_ = 0;
    std::vector<Elt> subgroup_;
    std::vector<Elt> ground_;
    std::vector<Elt> rep_of_residue_;       // residue -> coset representative
    std::vector<std::size_t> index_of_;     // residue -> index into ground_
    std::vector<char> leq_;                 // ground x ground, row-major
    std::vector<Elt> atoms_;
    std::vector<CoverRelation> covers_;
    std::vector<std::vector<PosetFactorization>> zcache_;
};

// Divisibility poset of the Apéry set: i ⪯ j iff a_i + a_{j-i} = a_j.
// Validates the tuple (NotInPolyhedron on failure); subgroup is trivial.
KunzPoset poset_from_apery(const AperyTuple& a);

// Poset of the face cut out by the given homogeneous equality rows (group-cone
// coordinates, columns x_1..x_{m-1}).  The subgroup is read off the rowspan;
// rows whose derived relation violates a partial-order axiom raise NotAFace.
KunzPoset poset_from_face(const IntMatrix& H, Elt m);

// Poset from explicit Hasse-diagram edges (lower, upper).  The edges must be
// exactly the covers of their transitive closure, reach every residue from 0,
// and carry atom labels; violations raise NotAFace.
KunzPoset poset_from_covers(Elt m, const std::vector<std::pair<Elt, Elt>>& covers);

// Free-function spelling of KunzPoset::factorizations.
const std::vector<PosetFactorization>& factorizations_poset(const KunzPoset& P, Elt p);

// Hasse diagram in DOT format: one node per ground element, one edge per
// cover, edges labeled "+atom", bottom-to-top rank direction.
std::string to_dot(const KunzPoset& P);

}  // namespace kunzkit
