#include <kunzkit/presentation.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include <kunzkit/errors.hpp>

namespace kunzkit {

namespace {

Elt mod(Elt a, Elt m) {
    const Elt r = a % m;
    return r < 0 ? r + m : r;
}

bool supports_overlap(const PosetFactorization& a, const PosetFactorization& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return true;
    return false;
}

// Connected components under `edge`, in order of first appearance; the input
// is canonically sorted, so each component leads with its canonical-first
// member.
template <class Edge>
std::vector<std::vector<PosetFactorization>> components_by(
    const std::vector<PosetFactorization>& zs, Edge edge) {
    const std::size_t n = zs.size();
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
                if (comp[w] == -1 && edge(zs[v], zs[w])) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<PosetFactorization>> out(static_cast<std::size_t>(next));
    for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(comp[i])].push_back(zs[i]);
    return out;
}

}  // namespace

std::vector<PosetTrade> minimal_presentation_poset(const KunzPoset& P) {
    std::vector<PosetTrade> trades;
    for (Elt p : P.ground()) {
        const auto comps = components_by(P.factorizations(p), supports_overlap);
        const PosetFactorization& hub = comps.front().front();
        for (std::size_t c = 1; c < comps.size(); ++c)
            trades.push_back({p, hub, comps[c].front()});
    }
    return trades;
}

std::vector<OuterBetti> outer_betti_elements(const KunzPoset& P) {
    const auto& atoms = P.atoms();
    const std::size_t k = atoms.size();

    auto step_down = [&](const PosetFactorization& w, std::size_t i) {
        PosetFactorization d = w;
        --d[i];
        return d;
    };

    // Candidates: one atom above a finite factorization, nil themselves, and
    // finite one step down in every support direction.
    std::set<PosetFactorization> seen;
    for (Elt p : P.ground())
        for (const auto& z : P.factorizations(p))
            for (std::size_t i = 0; i < k; ++i) {
                PosetFactorization w = z;
                ++w[i];
                if (seen.count(w) || P.evaluate(w) != KunzPoset::nil) continue;
                bool downs_finite = true;
                for (std::size_t j = 0; j < k && downs_finite; ++j)
                    if (w[j] > 0 && P.evaluate(step_down(w, j)) == KunzPoset::nil)
                        downs_finite = false;
                if (downs_finite) seen.insert(std::move(w));
            }
    std::vector<PosetFactorization> cand(seen.rbegin(), seen.rend());

    // Two candidates are linked when stepping down a common atom lands in the
    // same factorization set.
    auto linked = [&](const PosetFactorization& a, const PosetFactorization& b) {
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] > 0 && b[i] > 0 && P.evaluate(step_down(a, i)) == P.evaluate(step_down(b, i)))
                return true;
        return false;
    };

    std::vector<OuterBetti> out;
    for (auto& comp : components_by(cand, linked)) {
        // Keep the component only if stepping down each supported atom
        // reproduces a full factorization set.
        bool exhaustive = true;
        for (std::size_t i = 0; i < k && exhaustive; ++i) {
            std::set<PosetFactorization> down;
            for (const auto& w : comp)
                if (w[i] > 0) down.insert(step_down(w, i));
            if (down.empty()) continue;
            const auto& fiber = P.factorizations(P.evaluate(*down.begin()));
            exhaustive = down == std::set<PosetFactorization>(fiber.begin(), fiber.end());
        }
        if (!exhaustive) continue;

        Elt cls = 0;
        for (std::size_t i = 0; i < k; ++i) cls += comp.front()[i] * atoms[i];
        out.push_back({P.rep(cls), std::move(comp)});
    }
    std::sort(out.begin(), out.end(), [](const OuterBetti& a, const OuterBetti& b) {
        if (a.class_element != b.class_element) return a.class_element < b.class_element;
        return a.factorizations.front() > b.factorizations.front();
    });
    return out;
}

IntMatrix betti_matrix(const KunzPoset& P) {
    const auto& atoms = P.atoms();
    std::vector<IntVector> rows;
    for (const auto& t : minimal_presentation_poset(P)) {
        IntVector row(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i) row[i] = Int(t.left[i] - t.right[i]);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> labels(atoms.begin(), atoms.end());
    return IntMatrix::from_rows(rows, atoms.size(), labels);
}

std::size_t face_dimension(const KunzPoset& P) {
    return P.atoms().size() - rank(betti_matrix(P));
}

std::size_t presentation_cardinality(const KunzPoset& P) {
    return minimal_presentation_poset(P).size() + outer_betti_elements(P).size();
}

namespace {

// Exponent transport from atom coordinates to the semigroup layout
// [multiplicity, generators ascending]: generator g acts as the atom g mod m.
struct AtomLift {
    std::vector<std::size_t> atom_of;  // per generator index >= 1

    AtomLift(const std::vector<Elt>& gens, const std::vector<Elt>& atoms, Elt m)
        : atom_of(gens.size(), 0) {
        for (std::size_t i = 1; i < gens.size(); ++i) {
            const auto it = std::lower_bound(atoms.begin(), atoms.end(), gens[i] % m);
            atom_of[i] = static_cast<std::size_t>(it - atoms.begin());
        }
    }

    SgFactorization operator()(Elt mult, const PosetFactorization& z) const {
        SgFactorization w(atom_of.size(), 0);
        w[0] = mult;
        for (std::size_t i = 1; i < atom_of.size(); ++i) w[i] = z[atom_of[i]];
        return w;
    }
};

void push_oriented(std::vector<SgTrade>& out, Elt at, SgFactorization a, SgFactorization b) {
    if (a < b) std::swap(a, b);
    out.push_back({at, std::move(a), std::move(b)});
}

void sort_trades(std::vector<SgTrade>& trades) {
    std::sort(trades.begin(), trades.end(), [](const SgTrade& a, const SgTrade& b) {
        if (a.at != b.at) return a.at < b.at;
        if (a.left != b.left) return a.left > b.left;
        return a.right > b.right;
    });
}

}  // namespace

std::vector<SgTrade> m_centric_presentation(const NumericalSemigroup& S) {
    const KunzPoset P = poset_from_apery(S.apery());
    const Elt m = S.multiplicity();
    const auto& atoms = P.atoms();
    const AtomLift lift(S.generators(), atoms, m);

    auto value = [&](const PosetFactorization& z) {
        Elt v = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) v += z[i] * S.apery_value(atoms[i]);
        return v;
    };

    std::vector<SgTrade> trades;
    for (const auto& t : minimal_presentation_poset(P))
        push_oriented(trades, S.apery_value(t.at), lift(0, t.left), lift(0, t.right));
    for (const auto& B : outer_betti_elements(P)) {
        const PosetFactorization& znil = B.factorizations.front();
        const PosetFactorization& zap = P.factorizations(B.class_element).front();
        const Elt at = value(znil);
        push_oriented(trades, at, lift((at - value(zap)) / m, zap), lift(0, znil));
    }
    sort_trades(trades);
    return trades;
}

ParametricPresentation parametric_presentation(const KunzPoset& P) {
    if (P.subgroup().size() > 1)
        throw NotSemigroupFace("the subgroup of classes pinned to zero is nontrivial, so no "
                               "numerical semigroup lies on the face");
    const auto& atoms = P.atoms();
    ParametricPresentation pres{P, {}};
    for (const auto& t : minimal_presentation_poset(P))
        pres.trades.push_back({t.left, t.right, std::vector<Elt>(atoms.size(), 0), Rat(0)});
    for (const auto& B : outer_betti_elements(P)) {
        const PosetFactorization& znil = B.factorizations.front();
        const PosetFactorization& zap = P.factorizations(B.class_element).front();
        std::vector<Elt> coeffs(atoms.size());
        Elt dot = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            coeffs[i] = znil[i] - zap[i];
            dot += coeffs[i] * atoms[i];
        }
        pres.trades.push_back({zap, znil, std::move(coeffs), Rat(dot) / P.m()});
    }
    return pres;
}

std::vector<SgTrade> evaluate_parametric(const ParametricPresentation& pres, const KunzTuple& x) {
    const KunzPoset& P = pres.poset;
    const Elt m = P.m();
    if (x.m != m)
        throw DimensionMismatch("tuple has m = " + std::to_string(x.m) + ", presentation has m = " +
                                std::to_string(m));

    AperyTuple ap;
    try {
        ap = apery_of_kunz(x);  // also validates the tuple shape and the cone
    } catch (const NotInPolyhedron& e) {
        throw NotOnFace(std::string("the tuple is outside the polyhedron: ") + e.what());
    }
    auto val = [&](Elt r) { return r == 0 ? Elt(0) : ap.values[static_cast<std::size_t>(r) - 1]; };

    for (Elt i = 1; i < m; ++i)
        if (x.values[static_cast<std::size_t>(i) - 1] < 1)
            throw NotOnFace("coordinate x_" + std::to_string(i) +
                            " is below 1, so the tuple is no multiplicity-m semigroup");

    // The tuple must bind exactly the equalities the face binds.
    for (Elt p = 1; p < m; ++p)
        for (Elt q = 1; q < m; ++q) {
            if (p == q) continue;
            const Elt d = mod(q - p, m);
            const bool binding = val(p) + val(d) == val(q);
            if (binding == P.leq(p, q)) continue;
            const std::string relation = "a_" + std::to_string(p) + " + a_" + std::to_string(d) +
                                         " = a_" + std::to_string(q);
            throw NotOnFace(binding ? "the tuple binds " + relation + ", which is strict on the face"
                                    : "the face equality " + relation + " fails at the tuple");
        }

    // Generators of the semigroup at x: the multiplicity plus one generator
    // per atom, in ascending order of value.
    const auto& atoms = P.atoms();
    std::vector<Elt> gens = {m};
    for (Elt p : atoms) gens.push_back(val(p));
    std::sort(gens.begin() + 1, gens.end());
    const AtomLift lift(gens, atoms, m);

    std::vector<SgTrade> trades;
    for (const auto& t : pres.trades) {
        Rat count = t.ell_const;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            count += Rat(t.ell_coeffs[i]) * x.values[static_cast<std::size_t>(atoms[i]) - 1];
        if (boost::multiprecision::denominator(count) != 1 || count < 0)
            throw NotOnFace("the multiplicity count of a trade is not a non-negative integer");
        const Elt mult = static_cast<Elt>(boost::multiprecision::numerator(count));
        Elt at = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) at += t.right[i] * val(atoms[i]);
        push_oriented(trades, at, lift(mult, t.left), lift(0, t.right));
    }
    sort_trades(trades);
    return trades;
}

std::set<std::size_t> cardinality_spectrum(Elt m, Elt max_coord) {
    if (m < 1) throw NotAFace("the group order m must be positive");
    std::set<std::size_t> out;
    if (max_coord < 1) return out;
    const std::size_t n = static_cast<std::size_t>(m) - 1;

    std::vector<std::pair<Elt, Elt>> pairs;
    for (Elt i = 1; i < m; ++i)
        for (Elt j = i; j < m; ++j)
            if ((i + j) % m != 0) pairs.push_back({i, j});

    std::set<std::vector<char>> patterns;
    std::vector<Elt> x(n, 1);
    while (true) {
        auto val = [&](Elt r) { return r == 0 ? 0 : m * x[static_cast<std::size_t>(r) - 1] + r; };
        std::vector<char> pattern(pairs.size(), 0);
        bool inside = true;
        for (std::size_t t = 0; t < pairs.size() && inside; ++t) {
            const Elt slack = val(pairs[t].first) + val(pairs[t].second) -
                              val((pairs[t].first + pairs[t].second) % m);
            inside = slack >= 0;
            pattern[t] = slack == 0;
        }
        if (inside && patterns.insert(pattern).second) {
            std::vector<IntVector> rows;
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                if (!pattern[t]) continue;
                IntVector row(n, Int(0));
                auto bump = [&](Elt r, Int by) {
                    if (r != 0) row[static_cast<std::size_t>(r) - 1] += by;
                };
                bump(pairs[t].first, 1);
                bump(pairs[t].second, 1);
                bump((pairs[t].first + pairs[t].second) % m, -1);
                rows.push_back(std::move(row));
            }
            out.insert(presentation_cardinality(poset_from_face(IntMatrix::from_rows(rows, n), m)));
        }
        std::size_t pos = 0;
        while (pos < n && ++x[pos] > max_coord) {
            x[pos] = 1;
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

}  // namespace kunzkit
