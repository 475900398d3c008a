#pragma once

#include <vector>

#include <kunzkit/exactmath.hpp>
#include <kunzkit/facetools.hpp>
#include <kunzkit/kunzposet.hpp>
#include <kunzkit/semigroup.hpp>

// Brute-force reference implementations used by tests and the `check`
// subcommand.  They deliberately avoid the incremental algorithms of the
// presentation and poset modules: everything here is exhaustive enumeration
// plus elementary linear algebra.
namespace kunzkit::oracle {

// True iff the trades present S: for every element b up to
// max(Ap(S;m)) + 2*max(gen), the graph on the factorizations of b — edges
// between factorizations sharing a generator, plus moves z -> z - left + right
// for every trade applicable to z in either direction — is connected.  The
// bound exceeds the largest possible Betti element by a full generator, so a
// trade set passing here generates the whole factorization kernel.
bool check_presentation(const NumericalSemigroup& S, const std::vector<SgTrade>& trades);

// Face dimension straight from the definition: (m - 1) minus the rank of the
// equality matrix.
Elt dimension_by_rank(const Face& F);

// Z_P(p) by exhaustive scan: every exponent vector over the atoms with entry
// sum at most m - 1, filtered through KunzPoset::evaluate.  Returned in
// lexicographically descending order.
std::vector<PosetFactorization> factorizations_brute(const KunzPoset& P, Elt p);

}  // namespace kunzkit::oracle
