#include <kunzkit/semigroup.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace kunzkit {

namespace {

constexpr Elt kInf = std::numeric_limits<Elt>::max() / 4;

// a_i = least element of <gens> congruent to i mod m, via Dijkstra on Z_m with
// an arc j -> (j + n) mod m of weight n per generator.  Multiples of m never
// help (they raise the value without changing the residue), so generators
// divisible by m contribute nothing.
std::vector<Elt> apery_by_dijkstra(Elt m, const std::vector<Elt>& gens) {
    std::vector<Elt> dist(static_cast<std::size_t>(m), kInf);
    dist[0] = 0;
    using Node = std::pair<Elt, Elt>;  // (distance, vertex)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        for (Elt n : gens) {
            if (n % m == 0) continue;
            const Elt w = (v + n) % m;
            if (d + n < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = d + n;
                pq.push({d + n, w});
            }
        }
    }
    return dist;  // dist[i] = a_i; all finite because gcd(gens) = 1
}

bool contains_in(const std::vector<Elt>& apery_full, Elt m, Elt n) {
    if (n < 0) return false;
    return n >= apery_full[static_cast<std::size_t>(n % m)];
}

void descend(const std::vector<Elt>& gens, std::size_t idx, Elt rem, SgFactorization& cur,
             std::vector<SgFactorization>& out) {
    if (idx == 0) {
        if (rem % gens[0] == 0) {
            cur[0] = rem / gens[0];
            out.push_back(cur);
            cur[0] = 0;
        }
        return;
    }
    for (Elt e = rem / gens[idx]; e >= 0; --e) {
        cur[idx] = e;
        descend(gens, idx - 1, rem - e * gens[idx], cur, out);
    }
    cur[idx] = 0;
}

bool supports_overlap(const SgFactorization& a, const SgFactorization& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return true;
    return false;
}

// Connected components of the support-overlap graph, in order of first
// appearance; Z is canonically sorted, so each component leads with its
// canonical-first member.
std::vector<std::vector<SgFactorization>> support_components(
    const std::vector<SgFactorization>& Z) {
    const std::size_t n = Z.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<std::size_t> stack = {s};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (comp[w] == -1 && supports_overlap(Z[v], Z[w])) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<SgFactorization>> out(static_cast<std::size_t>(next));
    for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(comp[i])].push_back(Z[i]);
    return out;
}

}  // namespace

bool NumericalSemigroup::contains(Elt n) const {
    if (n < 0) return false;
    const Elt m = multiplicity();
    const Elt r = n % m;
    return n >= (r == 0 ? 0 : apery_.values[static_cast<std::size_t>(r) - 1]);
}

Elt NumericalSemigroup::apery_value(Elt residue) const {
    const Elt r = residue % multiplicity();
    return r == 0 ? 0 : apery_.values[static_cast<std::size_t>(r) - 1];
}

NumericalSemigroup normalize(std::vector<Elt> gens) {
    if (gens.empty()) throw NotNumerical("generator list is empty");
    for (Elt g : gens)
        if (g <= 0) throw NotNumerical("generator " + std::to_string(g) + " is not positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Elt g = 0;
    for (Elt v : gens) g = std::gcd(g, v);
    if (g != 1) throw NotNumerical("gcd of generators is " + std::to_string(g) + ", not 1");

    const Elt m = gens.front();
    const auto full = apery_by_dijkstra(m, gens);

    // n is a minimal generator iff n is not a sum of two nonzero elements,
    // i.e. no generator h < n leaves n - h in the semigroup.
    std::vector<Elt> minimal;
    for (Elt n : gens) {
        bool redundant = false;
        for (Elt h : gens) {
            if (h >= n) break;
            if (contains_in(full, m, n - h)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(n);
    }

    NumericalSemigroup S;
    S.generators_ = std::move(minimal);
    S.apery_.m = m;
    S.apery_.values.assign(full.begin() + 1, full.end());
    const Elt max_ap = full.empty() ? 0 : *std::max_element(full.begin(), full.end());
    S.frobenius_ = max_ap - m;  // m = 1 gives -1: the whole of N
    return S;
}

KunzTuple kunz_tuple(const NumericalSemigroup& S) {
    const Elt m = S.multiplicity();
    KunzTuple x{m, {}};
    x.values.reserve(static_cast<std::size_t>(m) - 1);
    for (Elt i = 1; i < m; ++i) x.values.push_back((S.apery_value(i) - i) / m);
    return x;
}

AperyTuple apery_of_kunz(const KunzTuple& x) {
    const Elt m = x.m;
    if (m < 1) throw NotInPolyhedron("multiplicity must be at least 1");
    if (static_cast<Elt>(x.values.size()) != m - 1)
        throw DimensionMismatch("Kunz tuple for m = " + std::to_string(m) + " needs " +
                                std::to_string(m - 1) + " coordinates, got " +
                                std::to_string(x.values.size()));
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (x.values[i] < 0)
            throw NotInPolyhedron("x_" + std::to_string(i + 1) + " is negative");

    // Kunz polyhedron facets: x_i + x_j >= x_{i+j} and x_i + x_j + 1 >= x_{i+j-m}.
    auto xi = [&](Elt i) { return x.values[static_cast<std::size_t>(i) - 1]; };
    for (Elt i = 1; i < m; ++i) {
        for (Elt j = i; j < m; ++j) {
            if ((i + j) % m == 0) continue;
            const Elt lhs = xi(i) + xi(j) + (i + j > m ? 1 : 0);
            if (lhs < xi((i + j) % m))
                throw NotInPolyhedron("facet x_" + std::to_string(i) + " + x_" +
                                      std::to_string(j) + " >= x_" + std::to_string((i + j) % m) +
                                      " violated");
        }
    }

    AperyTuple a{m, {}};
    a.values.reserve(x.values.size());
    for (Elt i = 1; i < m; ++i) a.values.push_back(m * xi(i) + i);
    return a;
}

KunzTuple kunz_of_apery(const AperyTuple& a) {
    const Elt m = a.m;
    if (m < 1) throw NotInPolyhedron("multiplicity must be at least 1");
    if (static_cast<Elt>(a.values.size()) != m - 1)
        throw DimensionMismatch("Apéry tuple for m = " + std::to_string(m) + " needs " +
                                std::to_string(m - 1) + " values, got " +
                                std::to_string(a.values.size()));
    KunzTuple x{m, {}};
    for (Elt i = 1; i < m; ++i) {
        const Elt ai = a.values[static_cast<std::size_t>(i) - 1];
        if (ai <= 0 || ai % m != i)
            throw NotInPolyhedron("a_" + std::to_string(i) + " = " + std::to_string(ai) +
                                  " is not a positive integer congruent to " + std::to_string(i) +
                                  " mod " + std::to_string(m));
        x.values.push_back((ai - i) / m);
    }
    apery_of_kunz(x);  // re-checks the facet inequalities
    return x;
}

NumericalSemigroup semigroup_of_kunz(const KunzTuple& x) {
    const AperyTuple a = apery_of_kunz(x);
    std::vector<Elt> gens = {x.m};
    gens.insert(gens.end(), a.values.begin(), a.values.end());
    return normalize(std::move(gens));  // gcd(m, a_1) divides a_1 - m*x_1 = 1
}

std::vector<SgFactorization> factorizations(const NumericalSemigroup& S, Elt n) {
    if (!S.contains(n))
        throw NotAnElement(std::to_string(n) + " is not an element of the semigroup");
    const auto& gens = S.generators();
    SgFactorization cur(gens.size(), 0);
    std::vector<SgFactorization> out;
    descend(gens, gens.size() - 1, n, cur, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<BettiElement> betti_elements_classic(const NumericalSemigroup& S) {
    const Elt m = S.multiplicity();
    Elt max_ap = 0;
    for (Elt i = 0; i < m; ++i) max_ap = std::max(max_ap, S.apery_value(i));
    const Elt bound = max_ap + S.generators().back();

    std::vector<BettiElement> out;
    for (Elt b = 1; b <= bound; ++b) {
        if (!S.contains(b)) continue;
        auto Z = factorizations(S, b);
        if (Z.size() < 2) continue;
        auto comps = support_components(Z);
        if (comps.size() < 2) continue;
        out.push_back({b, std::move(comps)});
    }
    return out;
}

std::vector<SgTrade> minimal_presentation_classic(const NumericalSemigroup& S) {
    std::vector<SgTrade> trades;
    for (const auto& betti : betti_elements_classic(S)) {
        const SgFactorization& hub = betti.components.front().front();
        for (std::size_t c = 1; c < betti.components.size(); ++c)
            trades.push_back({betti.element, hub, betti.components[c].front()});
    }
    return trades;
}

}  // namespace kunzkit
