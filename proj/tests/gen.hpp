#pragma once

// Random canonical multisets and scrambles for the round-trip suites.
// Scramble rules follow the transformation group of each problem.

#include "qmx/blocks.hpp"
#include "testutil.hpp"

namespace qmx::test {

// small pool of monic irreducibles over the exact domains
template <class K>
Poly<K> rand_irreducible(Rng& rng) {
    if constexpr (std::is_same_v<K, Rat>) {
        switch (rand_int(rng, 0, 5)) {
            case 0: return parse_poly<Rat>("x^2 + 1");
            case 1: return parse_poly<Rat>("x^2 - 2");
            case 2: return parse_poly<Rat>("x^2 + x + 1");
            default: {
                long c = rand_int(rng, -3, 3);
                return Poly<Rat>({Rat(-c), Rat(1)});
            }
        }
    } else if constexpr (std::is_same_v<K, GaussRat>) {
        switch (rand_int(rng, 0, 5)) {
            case 0: {
                // x^2 - i: i is not a square in Q(i)
                std::vector<GaussRat> c{-FT<GaussRat>::imaginary(), GaussRat(0), GaussRat(1)};
                return Poly<GaussRat>(c);
            }
            default: {
                GaussRat root(Rat(rand_int(rng, -2, 2)), Rat(rand_int(rng, -2, 2)));
                return Poly<GaussRat>({-root, FT<GaussRat>::one()});
            }
        }
    } else {
        static const Cplx pool[] = {{1.5, 0.0},  {-0.7, 1.2}, {0.0, 2.3},  {2.0, -1.0},
                                    {-1.8, 0.0}, {0.9, 0.9},  {-0.4, -1.6}};
        Cplx lam = pool[rand_int(rng, 0, 6)];
        return Poly<Cplx>({-lam, FT<Cplx>::one()});
    }
}

template <class K>
Poly<K> rand_irreducible_power(Rng& rng, int max_deg) {
    Poly<K> p = rand_irreducible<K>(rng);
    if (p.degree() > max_deg) p = Poly<K>({K(FT<K>::from_int(-rand_int(rng, -2, 2))), FT<K>::one()});
    int kmax = std::max(1, max_deg / p.degree());
    return poly_pow(p, (int)rand_int(rng, 1, std::min(kmax, 3)));
}

// unimodular and |.|>1 pools for the congruence problems
template <class K>
K rand_unimodular_scalar(Rng& rng) {
    if constexpr (std::is_same_v<K, GaussRat>) {
        switch (rand_int(rng, 0, 4)) {
            case 0: return GaussRat(Rat(1));
            case 1: return GaussRat(Rat(-1));
            case 2: return GaussRat(Rat(0), Rat(1));
            case 3: return GaussRat(make_rat(3, 5), make_rat(4, 5));
            default: return GaussRat(make_rat(-5, 13), make_rat(12, 13));
        }
    } else {
        double th = 0.25 + 0.4 * (double)rand_int(rng, 0, 7);
        return Cplx(std::cos(th), std::sin(th));
    }
}

template <class K>
K rand_big_scalar(Rng& rng) {  // |lam| > 1, well separated
    if constexpr (std::is_same_v<K, GaussRat>) {
        switch (rand_int(rng, 0, 4)) {
            case 0: return GaussRat(Rat(2));
            case 1: return GaussRat(Rat(-3));
            case 2: return GaussRat(Rat(0), Rat(2));
            case 3: return GaussRat(Rat(1), Rat(1));
            default: return GaussRat(Rat(-2), Rat(1));
        }
    } else {
        static const Cplx pool[] = {{2.0, 0.0}, {-1.5, 1.0}, {0.0, 3.0}, {1.4, -1.4}, {-2.5, 0.0}};
        return pool[rand_int(rng, 0, 4)];
    }
}

template <class K>
Block<K> rand_block(Problem prob, Rng& rng, int budget) {
    using B = Block<K>;
    switch (prob) {
        case Problem::Equivalence:
            switch (rand_int(rng, 0, 2)) {
                case 0: return B::equiv(BlockKind::EqIdentity);
                case 1: return B::equiv(BlockKind::EqZeroToF);
                default: return B::equiv(BlockKind::EqFToZero);
            }
        case Problem::Similarity:
            return B::sim(rand_irreducible_power<K>(rng, std::max(1, budget)));
        case Problem::Pencil:
            switch (rand_int(rng, 0, 3)) {
                case 0: return B::pencil_reg(rand_irreducible_power<K>(rng, std::max(1, budget)));
                case 1:
                    return B::pencil(BlockKind::PenNilpotentPair,
                                     (int)rand_int(rng, 1, std::max(1, budget)));
                case 2:
                    return B::pencil(BlockKind::PenColMin, (int)rand_int(rng, 1, std::max(1, budget)));
                default:
                    return B::pencil(BlockKind::PenRowMin, (int)rand_int(rng, 1, std::max(1, budget)));
            }
        case Problem::Contragredient:
            switch (rand_int(rng, 0, 3)) {
                case 0: return B::contra_reg(rand_irreducible_power<K>(rng, std::max(1, budget)));
                case 1:
                    return B::contra(BlockKind::ConNil, (int)rand_int(rng, 1, std::max(1, budget)));
                case 2:
                    return B::contra(BlockKind::ConColChain,
                                     (int)rand_int(rng, 1, std::max(1, budget)));
                default:
                    return B::contra(BlockKind::ConRowChain,
                                     (int)rand_int(rng, 1, std::max(1, budget)));
            }
        case Problem::Congruence: {
            int pick = (int)rand_int(rng, 0, 2);
            if (pick == 0 && budget >= 2) {
                int n = (int)rand_int(rng, 1, budget / 2);
                for (int tries = 0; tries < 20; ++tries) {
                    K lam = rand_big_scalar<K>(rng);
                    K forbidden = (n + 1) % 2 == 0 ? FT<K>::one() : -FT<K>::one();
                    if (lam == forbidden || FT<K>::is_zero(lam)) continue;
                    return B::congr(BlockKind::CgH, n, lam);
                }
            }
            if (pick == 1) return B::congr(BlockKind::CgGamma, (int)rand_int(rng, 1, budget));
            return B::congr(BlockKind::CgJzero, (int)rand_int(rng, 1, budget));
        }
        case Problem::StarCongruence: {
            int pick = (int)rand_int(rng, 0, 2);
            if (pick == 0 && budget >= 2)
                return B::starcongr(BlockKind::ScH, (int)rand_int(rng, 1, budget / 2),
                                    rand_big_scalar<K>(rng));
            if (pick == 1) {
                K mu = rand_unimodular_scalar<K>(rng);
                if (rand_int(rng, 0, 1)) mu = -mu;
                return B::starcongr(BlockKind::ScDelta, (int)rand_int(rng, 1, budget), mu);
            }
            return B::starcongr(BlockKind::ScJzero, (int)rand_int(rng, 1, budget));
        }
        case Problem::InertiaForm:
            return B::inertia((int)rand_int(rng, -1, 1));
    }
    fail("invalid-argument", "unknown problem");
}

template <class K>
Decomposition<K> rand_decomposition(Problem prob, Rng& rng, int total_dim) {
    Decomposition<K> d{prob, {}};
    int budget = total_dim;
    int guard = 0;
    while (budget > 0 && ++guard < 60) {
        Block<K> b = rand_block<K>(prob, rng, budget);
        auto [r, c] = block_shape(b);
        int sz = std::max({r, c, 1});
        if (sz > budget) continue;
        d.blocks.push_back(b);
        budget -= sz;
    }
    if (d.blocks.empty()) d.blocks.push_back(rand_block<K>(prob, rng, 1));
    d.sort();
    return d;
}

template <class K>
Matrix<K> rand_change(Rng& rng, int n) {
    if constexpr (FT<K>::exact)
        return rand_invertible<K>(rng, n);
    else
        return rand_unitary(rng, n);
}

// applies the problem's transformation group with random invertibles
template <class K>
std::vector<Matrix<K>> scramble(Problem prob, const std::vector<Matrix<K>>& mats, Rng& rng) {
    switch (prob) {
        case Problem::Equivalence: {
            auto R = rand_change<K>(rng, mats[0].rows()), S = rand_change<K>(rng, mats[0].cols());
            return {inverse(R) * mats[0] * S};
        }
        case Problem::Similarity: {
            auto S = rand_change<K>(rng, mats[0].rows());
            return {inverse(S) * mats[0] * S};
        }
        case Problem::Pencil: {
            auto R = rand_change<K>(rng, mats[0].rows()), S = rand_change<K>(rng, mats[0].cols());
            auto Ri = inverse(R);
            return {Ri * mats[0] * S, Ri * mats[1] * S};
        }
        case Problem::Contragredient: {
            auto R = rand_change<K>(rng, mats[0].rows()), S = rand_change<K>(rng, mats[0].cols());
            return {inverse(R) * mats[0] * S, inverse(S) * mats[1] * R};
        }
        case Problem::Congruence: {
            auto S = rand_change<K>(rng, mats[0].rows());
            return {S.transpose() * mats[0] * S};
        }
        case Problem::StarCongruence: {
            auto S = rand_change<K>(rng, mats[0].rows());
            return {star_transpose(S, Involution::Conjugation) * mats[0] * S};
        }
        case Problem::InertiaForm: {
            auto S = rand_change<K>(rng, mats[0].rows());
            return {S.transpose() * mats[0] * S};
        }
    }
    fail("invalid-argument", "unknown problem");
}

}  // namespace qmx::test
