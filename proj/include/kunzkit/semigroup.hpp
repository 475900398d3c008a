#pragma once

#include <cstdint>
#include <vector>

#include <kunzkit/errors.hpp>

namespace kunzkit {

// Semigroup elements.  Apéry values are bounded by m * max(generator), so a
// 64-bit type is ample; the exact linear algebra that can overflow lives in
// exactmath on arbitrary-precision integers.
using Elt = long long;

// Apéry coordinates (a_1, ..., a_{m-1}) with a_i ≡ i mod m; a_0 = 0 is implicit.
struct AperyTuple {
    Elt m = 0;
    std::vector<Elt> values;

    bool operator==(const AperyTuple&) const = default;
};

// Kunz coordinates x_i = (a_i - i)/m, non-negative integers.
struct KunzTuple {
    Elt m = 0;
    std::vector<Elt> values;

    bool operator==(const KunzTuple&) const = default;
};

// Exponent vector (z_0, ..., z_k) over the minimal generators, multiplicity
// coordinate first.
using SgFactorization = std::vector<Elt>;

// A relation between two factorizations of the same element `at`.
// Orientation: left has the larger multiplicity coordinate, ties broken by
// taking the lexicographically greater side.
struct SgTrade {
    Elt at = 0;
    SgFactorization left;
    SgFactorization right;

    bool operator==(const SgTrade&) const = default;
};

class NumericalSemigroup {
public:
    const std::vector<Elt>& generators() const { return generators_; }
    Elt multiplicity() const { return generators_.front(); }
    Elt frobenius() const { return frobenius_; }

    // Membership via the Apéry test: n ∈ S iff n >= a_{n mod m}.
    bool contains(Elt n) const;

    // (a_1, ..., a_{m-1}), memoized at construction.
    const AperyTuple& apery() const { return apery_; }
    // a_r for any residue r in [0, m), with a_0 = 0.
    Elt apery_value(Elt residue) const;

    bool operator==(const NumericalSemigroup&) const = default;

private:
    friend NumericalSemigroup normalize(std::vector<Elt> gens);
    NumericalSemigroup() = default;

    std::vector<Elt> generators_;  // minimal generating set, ascending
    AperyTuple apery_;
    Elt frobenius_ = -1;
};

// Reduce an arbitrary generating set to the minimal one; computes the Apéry
// set and Frobenius number.  Throws NotNumerical when gcd != 1 or the list is
// empty/non-positive.
NumericalSemigroup normalize(std::vector<Elt> gens);

KunzTuple kunz_tuple(const NumericalSemigroup& S);

// Validates the group-cone inequalities a_i + a_j >= a_{(i+j) mod m};
// throws NotInPolyhedron naming the violated facet.
AperyTuple apery_of_kunz(const KunzTuple& x);

// Semigroup generated by {m} ∪ {a_i}, minimalized.  A tuple with a zero
// coordinate yields multiplicity < m (all-zeros gives <1>); callers that
// require multiplicity exactly m must check values >= 1 themselves.
NumericalSemigroup semigroup_of_kunz(const KunzTuple& x);
KunzTuple kunz_of_apery(const AperyTuple& a);

// Complete factorization set Z_S(n), sorted lexicographically descending
// (canonical order for all factorization lists).  Throws NotAnElement.
std::vector<SgFactorization> factorizations(const NumericalSemigroup& S, Elt n);

// An element together with the connected components of its factorization
// graph (edges join factorizations with overlapping support).  Components are
// ordered by first appearance of a member in the canonical list; members keep
// canonical order.
struct BettiElement {
    Elt element = 0;
    std::vector<std::vector<SgFactorization>> components;
};

// All elements with disconnected factorization graph.  The search range
// b <= max(Ap) + max(gen) is a proven bound: any Betti element minus any
// generator in a relation's support lies in the Apéry set.
std::vector<BettiElement> betti_elements_classic(const NumericalSemigroup& S);

// Star pattern: within each Betti element, the representative (canonical-first
// member) of every later component is paired against the first component's
// representative.  Independent oracle for the poset-based presentations.
std::vector<SgTrade> minimal_presentation_classic(const NumericalSemigroup& S);

}  // namespace kunzkit
