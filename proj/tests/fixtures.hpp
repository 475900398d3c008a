#pragma once

// Shared inputs used across test suites: small semigroups and hyperplane
// matrices whose invariants are known from independent hand computation.

#include <numeric>
#include <random>
#include <vector>

#include <kunzkit/exactmath.hpp>
#include <kunzkit/semigroup.hpp>

namespace fixtures {

// 6x7 equality matrix (m = 8, group-cone coordinates) of the face cut out by
// 2x3=x6, x3+x7=x2, x4+x5=x1, 2x7=x6, x3+x6=x1, x2+x7=x1.  Rank 5, dimension 2,
// atoms {3,4,5,7}; no numerical semigroup lies on it (x3 and x7 are forced equal).
inline kunzkit::IntMatrix m8_face_matrix() {
    using kunzkit::Int;
    std::vector<kunzkit::IntVector> rows = {
        {0, 0, 2, 0, 0, -1, 0},
        {0, -1, 1, 0, 0, 0, 1},
        {-1, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, -1, 2},
        {-1, 0, 1, 0, 0, 1, 0},
        {-1, 1, 0, 0, 0, 0, 1},
    };
    return kunzkit::IntMatrix::from_rows(rows, 7);
}

// Equality matrix of the face of C(Z_6) containing <6,7,8,9> and <6,19,26,33>:
// a_1+a_3=a_4, 2a_2=a_4, a_2+a_3=a_5.
inline kunzkit::IntMatrix m6_face_matrix() {
    std::vector<kunzkit::IntVector> rows = {
        {1, 0, 1, -1, 0},
        {0, 2, 0, -1, 0},
        {0, 1, 1, 0, -1},
    };
    return kunzkit::IntMatrix::from_rows(rows, 5);
}

// Deterministic random numerical semigroups: multiplicity in [2,9], at most
// six minimal generators.  Values kept small so Apéry sets stay cheap.
inline std::vector<kunzkit::NumericalSemigroup> random_semigroups(std::size_t count,
                                                                  unsigned seed = 20260814) {
    std::mt19937 rng(seed);
    std::vector<kunzkit::NumericalSemigroup> out;
    while (out.size() < count) {
        const int m = std::uniform_int_distribution<int>(2, 9)(rng);
        const int extra = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<kunzkit::Elt> gens = {m};
        for (int i = 0; i < extra; ++i)
            gens.push_back(std::uniform_int_distribution<int>(m + 1, 6 * m)(rng));
        kunzkit::Elt g = 0;
        for (kunzkit::Elt v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        out.push_back(kunzkit::normalize(gens));
    }
    return out;
}

}  // namespace fixtures
