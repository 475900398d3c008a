#include <kunzkit/facetools.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include <kunzkit/errors.hpp>

namespace kunzkit {

namespace {

std::string form_name(const IntVector& v) {
    std::string out;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        if (!out.empty()) out += v[c] > 0 ? " + " : " - ";
        else if (v[c] < 0) out += "-";
        const Int mag = abs(v[c]);
        if (mag != 1) out += mag.str() + "*";
        out += "e_" + std::to_string(c + 1);
    }
    return out.empty() ? "0" : out;
}

Int dot(const IntVector& row, const IntVector& v) {
    Int s = 0;
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * v[c];
    return s;
}

IntVector apery_vector(const AperyTuple& a) {
    IntVector v;
    v.reserve(a.values.size());
    for (Elt e : a.values) v.push_back(Int(e));
    return v;
}

FacePosition position(const Face& F, const IntVector& v) {
    if (v.size() != F.equalities.cols())
        throw DimensionMismatch("tuple has " + std::to_string(v.size()) +
                                " coordinates, the face has " +
                                std::to_string(F.equalities.cols()));
    for (std::size_t r = 0; r < F.equalities.rows(); ++r)
        if (dot(F.equalities.row(r), v) != 0) return FacePosition::Off;

    bool boundary = false;
    const Elt m = F.m;
    for (Elt i = 1; i < m; ++i)
        for (Elt j = i; j < m; ++j) {
            const Elt k = (i + j) % m;
            if (k == 0) continue;
            const Int slack = v[static_cast<std::size_t>(i) - 1] +
                              v[static_cast<std::size_t>(j) - 1] -
                              v[static_cast<std::size_t>(k) - 1];
            if (slack < 0) return FacePosition::Off;
            if (slack != 0) continue;
            IntVector form(static_cast<std::size_t>(m) - 1, Int(0));
            form[static_cast<std::size_t>(i) - 1] += 1;
            form[static_cast<std::size_t>(j) - 1] += 1;
            form[static_cast<std::size_t>(k) - 1] -= 1;
            if (!rowspan_contains(F.equalities, form)) boundary = true;
        }
    return boundary ? FacePosition::Boundary : FacePosition::Interior;
}

// Integer solution of H y = rhs, or nullopt when none exists (in particular
// when even no rational one does).  Column echelon form by unimodular column
// operations, then forward substitution with exactness checks.
std::optional<IntVector> solve_integer(const IntMatrix& H, const IntVector& rhs) {
    const std::size_t r = H.rows(), n = H.cols();
    std::vector<IntVector> acol(n, IntVector(r, Int(0)));
    std::vector<IntVector> ucol(n, IntVector(n, Int(0)));
    for (std::size_t c = 0; c < n; ++c) {
        ucol[c][c] = 1;
        for (std::size_t k = 0; k < r; ++k) acol[c][k] = H.at(k, c);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column slot)
    std::size_t lead = 0;
    for (std::size_t row = 0; row < r && lead < n; ++row) {
        while (true) {
            std::size_t best = n;
            for (std::size_t c = lead; c < n; ++c)
                if (acol[c][row] != 0 && (best == n || abs(acol[c][row]) < abs(acol[best][row])))
                    best = c;
            if (best == n) break;
            std::swap(acol[best], acol[lead]);
            std::swap(ucol[best], ucol[lead]);
            bool remainder = false;
            for (std::size_t c = lead + 1; c < n; ++c) {
                if (acol[c][row] == 0) continue;
                const Int q = acol[c][row] / acol[lead][row];
                for (std::size_t k = 0; k < r; ++k) acol[c][k] -= q * acol[lead][k];
                for (std::size_t k = 0; k < n; ++k) ucol[c][k] -= q * ucol[lead][k];
                if (acol[c][row] != 0) remainder = true;
            }
            if (!remainder) break;
        }
        if (acol[lead][row] != 0) {
            pivots.push_back({row, lead});
            ++lead;
        }
    }

    IntVector z(n, Int(0));
    std::size_t next = 0;
    for (std::size_t row = 0; row < r; ++row) {
        Int residual = rhs[row];
        for (std::size_t c = 0; c < n; ++c) residual -= acol[c][row] * z[c];
        if (next < pivots.size() && pivots[next].first == row) {
            const std::size_t t = pivots[next].second;
            if (residual % acol[t][row] != 0) return std::nullopt;
            z[t] = residual / acol[t][row];
            ++next;
        } else if (residual != 0) {
            return std::nullopt;
        }
    }

    IntVector y(n, Int(0));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) y[k] += ucol[c][k] * z[c];
    return y;
}

}  // namespace

Face face_of_semigroup(const NumericalSemigroup& S) {
    const Elt m = S.multiplicity();
    const std::size_t n = static_cast<std::size_t>(m) - 1;
    std::vector<IntVector> rows;
    for (Elt i = 1; i < m; ++i)
        for (Elt j = i; j < m; ++j) {
            const Elt k = (i + j) % m;
            if (k == 0) continue;
            if (S.apery_value(i) + S.apery_value(j) != S.apery_value(k)) continue;
            IntVector row(n, Int(0));
            row[static_cast<std::size_t>(i) - 1] += 1;
            row[static_cast<std::size_t>(j) - 1] += 1;
            row[static_cast<std::size_t>(k) - 1] -= 1;
            rows.push_back(std::move(row));
        }
    return {m, IntMatrix::from_rows(rows, n)};
}

FacePosition on_face(const Face& F, const AperyTuple& a) {
    if (a.m != F.m)
        throw DimensionMismatch("tuple has m = " + std::to_string(a.m) + ", the face has m = " +
                                std::to_string(F.m));
    return position(F, apery_vector(a));
}

FacePosition on_face(const Face& F, const KunzTuple& x) {
    if (x.m != F.m)
        throw DimensionMismatch("tuple has m = " + std::to_string(x.m) + ", the face has m = " +
                                std::to_string(F.m));
    IntVector v;
    v.reserve(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i)
        v.push_back(Int(x.values[i]) * x.m + Int(i + 1));
    return position(F, v);
}

FindSemigroupResult find_semigroup_on_face(const Face& F, Elt bound) {
    if (bound < 1) throw DomainError("the search bound must be at least 1");
    const Elt m = F.m;
    const std::size_t n = static_cast<std::size_t>(m) - 1;

    // Impossibility certificates: a class pinned to zero, or two distinct
    // residues forced to coincide.
    for (Elt h = 1; h < m; ++h) {
        IntVector w(n, Int(0));
        w[static_cast<std::size_t>(h) - 1] = 1;
        if (rowspan_contains(F.equalities, w))
            return {FindSemigroupResult::Kind::ProvablyNone, std::nullopt, w,
                    "the rowspan contains e_" + std::to_string(h) + ", pinning a_" +
                        std::to_string(h) + " to zero"};
    }
    for (Elt i = 1; i < m; ++i)
        for (Elt j = i + 1; j < m; ++j) {
            IntVector w(n, Int(0));
            w[static_cast<std::size_t>(i) - 1] = 1;
            w[static_cast<std::size_t>(j) - 1] = -1;
            if (rowspan_contains(F.equalities, w))
                return {FindSemigroupResult::Kind::ProvablyNone, std::nullopt, w,
                        "the rowspan contains e_" + std::to_string(i) + " - e_" +
                            std::to_string(j) + ", forcing a_" + std::to_string(i) + " = a_" +
                            std::to_string(j) + " despite distinct residues mod " +
                            std::to_string(m)};
        }

    // Base point: a = iota + m*y with H a = 0, where iota = (1, ..., m-1).
    IntVector rhs;
    for (std::size_t r = 0; r < F.equalities.rows(); ++r) {
        const IntVector row = F.equalities.row(r);
        Int s = 0;
        for (std::size_t c = 0; c < n; ++c) s += row[c] * Int(c + 1);
        if (s % m != 0)
            return {FindSemigroupResult::Kind::ProvablyNone, std::nullopt, row,
                    "equality row " + std::to_string(r) + " (" + form_name(row) +
                        ") cannot vanish on any tuple with the residues 1..m-1"};
        rhs.push_back(-s / m);
    }
    const auto y0 = solve_integer(F.equalities, rhs);
    if (!y0)
        return {FindSemigroupResult::Kind::ProvablyNone, std::nullopt, IntVector{},
                "the equalities admit no integer point with the residues 1..m-1"};

    const auto basis = kernel_basis(F.equalities);
    const std::size_t d = basis.size();

    IntVector base(n);
    for (std::size_t c = 0; c < n; ++c) base[c] = Int(c + 1) + m * (*y0)[c];

    auto try_point = [&](const IntVector& a) -> std::optional<NumericalSemigroup> {
        AperyTuple tuple{m, {}};
        for (std::size_t c = 0; c < n; ++c) {
            if (a[c] < 1) return std::nullopt;
            tuple.values.push_back(static_cast<Elt>(a[c]));
        }
        if (position(F, a) != FacePosition::Interior) return std::nullopt;
        return semigroup_of_kunz(kunz_of_apery(tuple));
    };

    std::vector<Elt> c(d, 0);
    for (Elt shell = 0; shell <= bound; ++shell) {
        std::fill(c.begin(), c.end(), -shell);
        while (true) {
            const bool on_shell =
                shell == 0 || std::any_of(c.begin(), c.end(), [&](Elt v) { return v == shell || v == -shell; });
            if (on_shell) {
                IntVector a = base;
                for (std::size_t t = 0; t < d; ++t)
                    for (std::size_t k = 0; k < n; ++k) a[k] += Int(m) * c[t] * basis[t][k];
                if (auto S = try_point(a))
                    return {FindSemigroupResult::Kind::Found, std::move(S), IntVector{},
                            "interior point at coefficient shell " + std::to_string(shell)};
            }
            std::size_t pos = 0;
            while (pos < d && ++c[pos] > shell) {
                c[pos] = -shell;
                ++pos;
            }
            if (pos == d) break;
        }
        if (d == 0) break;  // single candidate point; no shells to grow
    }
    return {FindSemigroupResult::Kind::NoneWithinBound, std::nullopt, IntVector{},
            "no interior point with coefficients up to " + std::to_string(bound) + " over " +
                std::to_string(d) + " kernel directions"};
}

}  // namespace kunzkit
