#include <kunzkit/kunzposet.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace kunzkit {

namespace {

Elt mod(Elt a, Elt m) { return ((a % m) + m) % m; }

std::string bar(Elt p) { return std::to_string(p) + "-bar"; }

}  // namespace

Elt KunzPoset::rep(Elt residue) const {
    return rep_of_residue_[static_cast<std::size_t>(mod(residue, m_))];
}

std::size_t KunzPoset::index(Elt ground_value) const {
    return index_of_[static_cast<std::size_t>(mod(ground_value, m_))];
}

bool KunzPoset::leq(Elt a, Elt b) const {
    return leq_[index(a) * ground_.size() + index(b)] != 0;
}

Elt KunzPoset::nil_add(Elt a, Elt b) const {
    if (a == nil || b == nil) return nil;
    const Elt s = rep(a + b);
    return leq(a, s) ? s : nil;
}

Elt KunzPoset::evaluate(const PosetFactorization& z) const {
    if (z.size() != atoms_.size())
        throw DimensionMismatch("factorization has " + std::to_string(z.size()) +
                                " exponents, poset has " + std::to_string(atoms_.size()) +
                                " atoms");
    for (Elt e : z)
        if (e < 0) throw NotAnElement("factorization exponents must be non-negative");
    // Every non-nil ⊕ step climbs strictly in the poset, so more atoms than
    // the longest possible chain always lands on ∞.
    const Elt longest = static_cast<Elt>(ground_.size()) - 1;
    Elt total = 0;
    for (Elt e : z) {
        total += e;
        if (total > longest) return nil;
    }
    Elt cur = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (Elt c = 0; c < z[i]; ++c) {
            cur = nil_add(cur, atoms_[i]);
            if (cur == nil) return nil;
        }
    return cur;
}

const std::vector<PosetFactorization>& KunzPoset::factorizations(Elt p) const {
    if (p == nil) throw NotAnElement("the nil element has no finite factorization set");
    return zcache_[index(p)];
}

std::vector<Elt> KunzPoset::maximal_elements() const {
    std::vector<Elt> out;
    for (Elt p : ground_) {
        bool maximal = true;
        for (Elt q : ground_)
            if (q != p && leq(p, q)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(p);
    }
    return out;
}

std::size_t KunzPoset::embedding_dimension() const {
    if (subgroup_.size() > 1)
        throw NotSemigroupFace("the Kunz subgroup is nontrivial; no semigroup lies on the face");
    return atoms_.size() + 1;
}

std::size_t KunzPoset::type() const {
    if (subgroup_.size() > 1)
        throw NotSemigroupFace("the Kunz subgroup is nontrivial; no semigroup lies on the face");
    return maximal_elements().size();
}

bool KunzPoset::operator==(const KunzPoset& other) const {
    return m_ == other.m_ && subgroup_ == other.subgroup_ && ground_ == other.ground_ &&
           leq_ == other.leq_;
}

void KunzPoset::finalize() {
    const std::size_t g = ground_.size();
    auto related = [&](std::size_t a, std::size_t b) { return leq_[a * g + b] != 0; };

    for (std::size_t p = 0; p < g; ++p) {
        if (!related(p, p))
            throw NotAFace("relation is not reflexive at " + bar(ground_[p]));
        if (!related(0, p))
            throw NotAFace("0-bar is not below " + bar(ground_[p]) +
                           "; the order lacks a unique minimum");
    }
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            if (a != b && related(a, b) && related(b, a))
                throw NotAFace("antisymmetry fails between " + bar(ground_[a]) + " and " +
                               bar(ground_[b]));
            if (!related(a, b)) continue;
            for (std::size_t c = 0; c < g; ++c)
                if (related(b, c) && !related(a, c))
                    throw NotAFace("transitivity fails: " + bar(ground_[a]) + " <= " +
                                   bar(ground_[b]) + " <= " + bar(ground_[c]));
        }

    covers_.clear();
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            if (a == b || !related(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < g && cover; ++c)
                if (c != a && c != b && related(a, c) && related(c, b)) cover = false;
            if (cover) covers_.push_back({ground_[a], ground_[b], rep(ground_[b] - ground_[a])});
        }
    std::sort(covers_.begin(), covers_.end());

    atoms_.clear();
    for (const auto& c : covers_)
        if (c.lower == 0) atoms_.push_back(c.upper);

    // b-bar covers a-bar iff (b-a)-bar is an atom, for every related pair.
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            if (a == b || !related(a, b)) continue;
            const bool is_cover =
                std::find(covers_.begin(), covers_.end(),
                          CoverRelation{ground_[a], ground_[b],
                                        rep(ground_[b] - ground_[a])}) != covers_.end();
            const bool diff_atom =
                std::binary_search(atoms_.begin(), atoms_.end(), rep(ground_[b] - ground_[a]));
            if (is_cover != diff_atom)
                throw NotAFace("cover law fails between " + bar(ground_[a]) + " and " +
                               bar(ground_[b]) + ": the difference " +
                               bar(rep(ground_[b] - ground_[a])) +
                               (diff_atom ? " is an atom but the pair is not a cover"
                                          : " is not an atom but the pair is a cover"));
        }

    // Z_P(p) bottom-up along a linear extension (downset size is strictly
    // monotone along the order).
    std::vector<std::size_t> downset(g, 0);
    for (std::size_t p = 0; p < g; ++p)
        for (std::size_t c = 0; c < g; ++c)
            if (related(c, p)) ++downset[p];
    std::vector<std::size_t> order(g);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return downset[a] != downset[b] ? downset[a] < downset[b] : ground_[a] < ground_[b];
    });

    const std::size_t k = atoms_.size();
    zcache_.assign(g, {});
    zcache_[0] = {PosetFactorization(k, 0)};
    for (std::size_t t = 0; t < g; ++t) {
        const std::size_t p = order[t];
        if (ground_[p] == 0) continue;
        std::set<PosetFactorization, std::greater<>> acc;
        for (std::size_t i = 0; i < k; ++i) {
            if (!related(index(atoms_[i]), p)) continue;
            const std::size_t below = index(ground_[p] - atoms_[i]);
            for (PosetFactorization z : zcache_[below]) {
                ++z[i];
                acc.insert(std::move(z));
            }
        }
        zcache_[p].assign(acc.begin(), acc.end());
    }
}

KunzPoset poset_from_apery(const AperyTuple& a) {
    kunz_of_apery(a);  // validates residues and polyhedron membership
    const Elt m = a.m;
    const std::size_t n = static_cast<std::size_t>(m);

    KunzPoset P;
    P.m_ = m;
    P.subgroup_ = {0};
    P.ground_.resize(n);
    std::iota(P.ground_.begin(), P.ground_.end(), 0);
    P.rep_of_residue_ = P.ground_;
    P.index_of_.resize(n);
    std::iota(P.index_of_.begin(), P.index_of_.end(), 0);

    auto val = [&](Elt r) { return r == 0 ? 0 : a.values[static_cast<std::size_t>(r) - 1]; };
    P.leq_.assign(n * n, 0);
    for (Elt i = 0; i < m; ++i)
        for (Elt j = 0; j < m; ++j)
            P.leq_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
                val(i) + val(mod(j - i, m)) == val(j) ? 1 : 0;

    P.finalize();
    return P;
}

KunzPoset poset_from_face(const IntMatrix& H, Elt m) {
    if (m < 1) throw NotAFace("the group order m must be positive");
    if (H.cols() != static_cast<std::size_t>(m - 1))
        throw DimensionMismatch("equality rows have " + std::to_string(H.cols()) +
                                " columns, expected " + std::to_string(m - 1));

    auto unit = [&](Elt r) {
        IntVector v(static_cast<std::size_t>(m - 1), Int(0));
        v[static_cast<std::size_t>(r) - 1] = 1;
        return v;
    };
    std::vector<Elt> sub = {0};
    for (Elt h = 1; h < m; ++h)
        if (rowspan_contains(H, unit(h))) sub.push_back(h);
    for (Elt h1 : sub)
        for (Elt h2 : sub)
            if (!std::binary_search(sub.begin(), sub.end(), mod(h1 + h2, m)))
                throw NotAFace("the classes with x_h = 0 do not form a subgroup: contains " +
                               std::to_string(h1) + " and " + std::to_string(h2) + " but not " +
                               std::to_string(mod(h1 + h2, m)));

    KunzPoset P;
    P.m_ = m;
    P.subgroup_ = sub;
    const std::size_t n = static_cast<std::size_t>(m);
    P.rep_of_residue_.assign(n, 0);
    for (Elt r = 0; r < m; ++r) {
        Elt best = r;
        for (Elt h : sub) best = std::min(best, mod(r + h, m));
        P.rep_of_residue_[static_cast<std::size_t>(r)] = best;
    }
    for (Elt r = 0; r < m; ++r)
        if (P.rep_of_residue_[static_cast<std::size_t>(r)] == r) P.ground_.push_back(r);
    P.index_of_.assign(n, 0);
    for (Elt r = 0; r < m; ++r)
        P.index_of_[static_cast<std::size_t>(r)] = static_cast<std::size_t>(
            std::lower_bound(P.ground_.begin(), P.ground_.end(),
                             P.rep_of_residue_[static_cast<std::size_t>(r)]) -
            P.ground_.begin());

    // x_a + x_{b-a} - x_b as a group-cone form (class 0 contributes nothing).
    auto form = [&](Elt a, Elt b) {
        IntVector v(static_cast<std::size_t>(m - 1), Int(0));
        auto bump = [&](Elt r, int s) {
            r = mod(r, m);
            if (r != 0) v[static_cast<std::size_t>(r) - 1] += s;
        };
        bump(a, +1);
        bump(b - a, +1);
        bump(b, -1);
        return v;
    };

    const std::size_t g = P.ground_.size();
    P.leq_.assign(g * g, 0);
    for (std::size_t ia = 0; ia < g; ++ia)
        for (std::size_t ib = 0; ib < g; ++ib) {
            const Elt a = P.ground_[ia];
            const Elt b = P.ground_[ib];
            const bool base = rowspan_contains(H, form(a, b));
            if (sub.size() > 1) {
                for (Elt h1 : sub)
                    for (Elt h2 : sub)
                        if (rowspan_contains(H, form(mod(a + h1, m), mod(b + h2, m))) != base)
                            throw NotAFace("the relation is not well-defined on cosets: " +
                                           bar(a) + " <= " + bar(b) +
                                           " depends on the chosen representatives");
            }
            P.leq_[ia * g + ib] = base ? 1 : 0;
        }

    P.finalize();
    return P;
}

KunzPoset poset_from_covers(Elt m, const std::vector<std::pair<Elt, Elt>>& covers) {
    if (m < 1) throw NotAFace("the group order m must be positive");
    const std::size_t n = static_cast<std::size_t>(m);
    for (const auto& [lo, hi] : covers) {
        if (lo < 0 || lo >= m || hi < 0 || hi >= m)
            throw NotAFace("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                           ") is outside Z_" + std::to_string(m));
        if (lo == hi)
            throw NotAFace("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                           ") is a loop");
    }

    KunzPoset P;
    P.m_ = m;
    P.subgroup_ = {0};
    P.ground_.resize(n);
    std::iota(P.ground_.begin(), P.ground_.end(), 0);
    P.rep_of_residue_ = P.ground_;
    P.index_of_.resize(n);
    std::iota(P.index_of_.begin(), P.index_of_.end(), 0);

    // Reflexive-transitive closure of the edges.
    P.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) P.leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : covers)
        P.leq_[static_cast<std::size_t>(lo) * n + static_cast<std::size_t>(hi)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (P.leq_[i * n + k] && P.leq_[k * n + j]) P.leq_[i * n + j] = 1;

    P.finalize();

    // The input must be exactly the Hasse diagram of its own closure.
    std::set<std::pair<Elt, Elt>> given(covers.begin(), covers.end());
    std::set<std::pair<Elt, Elt>> derived;
    for (const auto& c : P.covers_) derived.insert({c.lower, c.upper});
    for (const auto& e : given)
        if (!derived.count(e))
            throw NotAFace("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                           ") is implied transitively and is not a cover");
    for (const auto& e : derived)
        if (!given.count(e))
            throw NotAFace("cover (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                           ") of the generated order is missing from the input");
    return P;
}

const std::vector<PosetFactorization>& factorizations_poset(const KunzPoset& P, Elt p) {
    return P.factorizations(p);
}

std::string to_dot(const KunzPoset& P) {
    std::ostringstream os;
    os << "digraph kunz_poset {\n  rankdir=BT;\n";
    for (Elt p : P.ground()) os << "  n" << p << " [label=\"" << p << "\"];\n";
    for (const auto& c : P.covers())
        os << "  n" << c.lower << " -> n" << c.upper << " [label=\"+" << c.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace kunzkit
