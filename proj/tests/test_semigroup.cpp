#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <doctest.h>
#include <kunzkit/semigroup.hpp>

#include "fixtures.hpp"

using namespace kunzkit;

namespace {

// Independent membership oracle: bounded knapsack over the generators.
bool knapsack_contains(const std::vector<Elt>& gens, Elt n) {
    if (n < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (Elt v = 1; v <= n; ++v)
        for (Elt g : gens)
            if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reach[static_cast<std::size_t>(n)] != 0;
}

Elt phi(const NumericalSemigroup& S, const SgFactorization& z) {
    Elt total = 0;
    for (std::size_t i = 0; i < z.size(); ++i) total += z[i] * S.generators()[i];
    return total;
}

std::set<Elt> betti_values(const NumericalSemigroup& S) {
    std::set<Elt> out;
    for (const auto& b : betti_elements_classic(S)) out.insert(b.element);
    return out;
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("normalize reduces to the minimal generating set") {
    CHECK(normalize({6, 7, 8, 9, 13}).generators() == std::vector<Elt>{6, 7, 8, 9});
    CHECK(normalize({4, 9, 14, 15}).generators() == std::vector<Elt>{4, 9, 14, 15});
    CHECK(normalize({9, 6, 8, 7, 8}).generators() == std::vector<Elt>{6, 7, 8, 9});
    CHECK(normalize({3, 5, 7}).generators() == std::vector<Elt>{3, 5, 7});
    CHECK(normalize({1, 5}).generators() == std::vector<Elt>{1});
}

TEST_CASE("normalize rejects non-numerical input") {
    CHECK_THROWS_AS(normalize({2, 4}), NotNumerical);
    CHECK_THROWS_AS(normalize({}), NotNumerical);
    CHECK_THROWS_AS(normalize({0, 3}), NotNumerical);
    CHECK_THROWS_AS(normalize({-2, 3}), NotNumerical);
}

TEST_CASE("apery golden values") {
    CHECK(normalize({6, 7, 8, 9}).apery().values == std::vector<Elt>{7, 8, 9, 16, 17});
    CHECK(normalize({6, 19, 26, 33}).apery().values == std::vector<Elt>{19, 26, 33, 52, 59});
    CHECK(normalize({4, 9, 14, 15}).apery().values == std::vector<Elt>{9, 14, 15});
}

TEST_CASE("membership golden values") {
    const auto S = normalize({6, 9, 20});
    CHECK(S.contains(0));
    CHECK(S.contains(49));
    CHECK_FALSE(S.contains(43));
    CHECK_FALSE(S.contains(-6));
}

TEST_CASE("membership agrees with bounded knapsack on random semigroups") {
    for (const auto& S : fixtures::random_semigroups(100)) {
        const Elt limit = S.frobenius() + 2 * S.multiplicity();
        for (Elt n = 0; n <= limit; ++n)
            REQUIRE(S.contains(n) == knapsack_contains(S.generators(), n));
    }
}

TEST_CASE("apery covers every residue class exactly once") {
    for (const auto& S : fixtures::random_semigroups(50, 7)) {
        const Elt m = S.multiplicity();
        std::set<Elt> residues;
        for (Elt i = 0; i < m; ++i) {
            const Elt a = S.apery_value(i);
            CHECK(a % m == i);
            CHECK(S.contains(a));
            CHECK_FALSE(S.contains(a - m));
            residues.insert(a % m);
        }
        CHECK(residues.size() == static_cast<std::size_t>(m));
        CHECK(S.frobenius() ==
              *std::max_element(S.apery().values.begin(), S.apery().values.end()) - m);
    }
}

TEST_CASE("kunz tuple conversions") {
    const auto S = normalize({6, 7, 8, 9});
    const KunzTuple x = kunz_tuple(S);
    CHECK(x.values == std::vector<Elt>{1, 1, 1, 2, 2});
    CHECK(apery_of_kunz(x) == S.apery());
    CHECK(semigroup_of_kunz(x) == S);
    CHECK(kunz_of_apery(S.apery()) == x);
}

TEST_CASE("kunz round-trip on random semigroups") {
    for (const auto& S : fixtures::random_semigroups(100, 11)) {
        const KunzTuple x = kunz_tuple(S);
        CHECK(apery_of_kunz(x) == S.apery());
        CHECK(semigroup_of_kunz(x) == S);
        CHECK(kunz_of_apery(S.apery()) == x);
    }
}

TEST_CASE("all-zero kunz tuple is in the polyhedron but collapses to <1>") {
    const KunzTuple zero{5, {0, 0, 0, 0}};
    const auto S = semigroup_of_kunz(zero);
    CHECK(S.multiplicity() == 1);
    CHECK(S.generators() == std::vector<Elt>{1});
}

TEST_CASE("kunz validation names the violated facet") {
    CHECK_THROWS_WITH_AS(apery_of_kunz({3, {0, 5}}), doctest::Contains("x_1 + x_1 >= x_2"),
                         NotInPolyhedron);
    CHECK_THROWS_AS(apery_of_kunz({6, {1, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(apery_of_kunz({4, {1, -1, 1}}), NotInPolyhedron);
    // a_2 = 9 is not congruent to 2 mod 4
    CHECK_THROWS_AS(kunz_of_apery({4, {5, 9, 7}}), NotInPolyhedron);
    CHECK_THROWS_AS(kunz_of_apery({4, {5, 6}}), DimensionMismatch);
}

TEST_CASE("factorization golden values") {
    const auto S = normalize({4, 9, 14, 15});
    CHECK(factorizations(S, 24) ==
          std::vector<SgFactorization>{{6, 0, 0, 0}, {0, 1, 0, 1}});
    CHECK(factorizations(S, 28) ==
          std::vector<SgFactorization>{{7, 0, 0, 0}, {1, 1, 0, 1}, {0, 0, 2, 0}});
    CHECK(factorizations(S, 0) == std::vector<SgFactorization>{{0, 0, 0, 0}});
    CHECK_THROWS_AS(factorizations(S, 5), NotAnElement);
}

TEST_CASE("factorizations are complete, valued correctly, and sorted descending") {
    for (const auto& S : fixtures::random_semigroups(40, 23)) {
        const Elt n = S.frobenius() + 1 + S.multiplicity();
        const auto Z = factorizations(S, n);
        REQUIRE_FALSE(Z.empty());
        CHECK(std::is_sorted(Z.begin(), Z.end(), std::greater<>()));
        for (const auto& z : Z) CHECK(phi(S, z) == n);
        // Completeness cross-check: count solutions by brute-force odometer.
        std::size_t count = 0;
        std::vector<Elt> cur(S.generators().size(), 0);
        const auto& gens = S.generators();
        std::function<void(std::size_t, Elt)> rec = [&](std::size_t idx, Elt rem) {
            if (idx + 1 == gens.size()) {
                if (rem % gens[idx] == 0) ++count;
                return;
            }
            for (Elt e = 0; e * gens[idx] <= rem; ++e) rec(idx + 1, rem - e * gens[idx]);
        };
        rec(0, n);
        CHECK(Z.size() == count);
    }
}

TEST_CASE("betti element golden sets") {
    CHECK(betti_values(normalize({6, 7, 8, 9})) == std::set<Elt>{14, 15, 16, 18});
    CHECK(betti_values(normalize({9, 20, 30, 35})) == std::set<Elt>{60, 65, 70, 75, 80, 90});
    CHECK(betti_values(normalize({2, 3})) == std::set<Elt>{6});
}

TEST_CASE("classic minimal presentation golden values") {
    const auto S = normalize({6, 7, 8, 9});
    const auto trades = minimal_presentation_classic(S);
    REQUIRE(trades.size() == 4);
    CHECK(std::find(trades.begin(), trades.end(),
                    SgTrade{16, {0, 1, 0, 1}, {0, 0, 2, 0}}) != trades.end());

    CHECK(minimal_presentation_classic(normalize({2, 3})) ==
          std::vector<SgTrade>{{6, {3, 0}, {0, 2}}});

    CHECK(minimal_presentation_classic(normalize({4, 5, 6, 7})).size() == 6);
}

TEST_CASE("classic presentation trades balance and have disjoint supports") {
    for (const auto& S : fixtures::random_semigroups(60, 31)) {
        for (const auto& t : minimal_presentation_classic(S)) {
            CHECK(phi(S, t.left) == t.at);
            CHECK(phi(S, t.right) == t.at);
            CHECK(t.left != t.right);
            CHECK(t.left > t.right);  // orientation: canonical-greater side first
            for (std::size_t i = 0; i < t.left.size(); ++i)
                CHECK((t.left[i] == 0 || t.right[i] == 0));
        }
    }
}

}  // TEST_SUITE
