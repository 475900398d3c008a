#include "kunzkit/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "kunzkit/errors.hpp"

namespace kunzkit::oracle {

namespace {

// All solutions of sum z_i * gens[i] = target, appended to out.
void enumerate_sums(const std::vector<Elt>& gens, std::size_t i, Elt target, SgFactorization& cur,
                    std::vector<SgFactorization>& out) {
    if (i + 1 == gens.size()) {
        if (target % gens[i] == 0) {
            cur[i] = target / gens[i];
            out.push_back(cur);
            cur[i] = 0;
        }
        return;
    }
    for (Elt c = 0; c * gens[i] <= target; ++c) {
        cur[i] = c;
        enumerate_sums(gens, i + 1, target - c * gens[i], cur, out);
    }
    cur[i] = 0;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool applies(const SgFactorization& z, const SgFactorization& side) {
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] < side[i]) return false;
    return true;
}

SgFactorization apply(const SgFactorization& z, const SgFactorization& from,
                      const SgFactorization& to) {
    SgFactorization out = z;
    for (std::size_t i = 0; i < z.size(); ++i) out[i] += to[i] - from[i];
    return out;
}

}  // namespace

bool check_presentation(const NumericalSemigroup& S, const std::vector<SgTrade>& trades) {
    const auto& gens = S.generators();
    const std::size_t k = gens.size();
    for (const auto& t : trades)
        if (t.left.size() != k || t.right.size() != k)
            throw DimensionMismatch("trade sides must have one entry per generator");

    Elt bound = 0;
    for (Elt r = 1; r < S.multiplicity(); ++r) bound = std::max(bound, S.apery_value(r));
    bound += 2 * gens.back();

    for (Elt b = 1; b <= bound; ++b) {
        if (!S.contains(b)) continue;

        std::vector<SgFactorization> zs;
        SgFactorization cur(k, 0);
        enumerate_sums(gens, 0, b, cur, zs);
        if (zs.size() <= 1) continue;

        std::map<SgFactorization, std::size_t> index;
        for (std::size_t i = 0; i < zs.size(); ++i) index.emplace(zs[i], i);

        UnionFind uf(zs.size());
        // Factorizations sharing a generator form a clique; chaining the
        // members with z_g > 0 per generator g yields the same components.
        for (std::size_t g = 0; g < k; ++g) {
            std::size_t prev = zs.size();
            for (std::size_t i = 0; i < zs.size(); ++i) {
                if (zs[i][g] == 0) continue;
                if (prev != zs.size()) uf.unite(prev, i);
                prev = i;
            }
        }
        for (std::size_t i = 0; i < zs.size(); ++i)
            for (const auto& t : trades) {
                if (applies(zs[i], t.left)) {
                    const auto it = index.find(apply(zs[i], t.left, t.right));
                    if (it != index.end()) uf.unite(i, it->second);
                }
                if (applies(zs[i], t.right)) {
                    const auto it = index.find(apply(zs[i], t.right, t.left));
                    if (it != index.end()) uf.unite(i, it->second);
                }
            }

        const std::size_t root = uf.find(0);
        for (std::size_t i = 1; i < zs.size(); ++i)
            if (uf.find(i) != root) return false;
    }
    return true;
}

Elt dimension_by_rank(const Face& F) { return (F.m - 1) - static_cast<Elt>(rank(F.equalities)); }

std::vector<PosetFactorization> factorizations_brute(const KunzPoset& P, Elt p) {
    const Elt target = P.rep(p);
    const std::size_t k = P.atoms().size();
    const Elt max_len = P.m() - 1;

    std::vector<PosetFactorization> out;
    PosetFactorization z(k, 0);
    while (true) {
        if (P.evaluate(z) == target) out.push_back(z);
        // Odometer over all vectors with entry sum at most max_len.
        std::size_t pos = 0;
        Elt len = std::accumulate(z.begin(), z.end(), Elt(0));
        while (pos < k && len + 1 > max_len) {
            len -= z[pos];
            z[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++z[pos];
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace kunzkit::oracle
