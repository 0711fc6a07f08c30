#pragma once

// Canonical block descriptors for the six matrix problems, the literal block
// constructors, and realize() building representations from block multisets.

#include "qmx/factor.hpp"
#include "qmx/linalg.hpp"
#include "qmx/rep.hpp"

namespace qmx {

enum class Problem {
    Equivalence,
    Similarity,
    Pencil,
    Contragredient,
    Congruence,
    StarCongruence,
    InertiaForm,
};

inline const char* problem_name(Problem p) {
    switch (p) {
        case Problem::Equivalence: return "equivalence";
        case Problem::Similarity: return "similarity";
        case Problem::Pencil: return "pencil";
        case Problem::Contragredient: return "contragredient";
        case Problem::Congruence: return "congruence";
        case Problem::StarCongruence: return "star-congruence";
        case Problem::InertiaForm: return "inertia";
    }
    return "?";
}

enum class BlockKind {
    EqIdentity, EqZeroToF, EqFToZero,            // equivalence, Eq (key)
    Companion,                                   // similarity, Eq (kut)
    PenReg, PenNilpotentPair, PenColMin, PenRowMin,  // pencil, Eq (lic)
    ConReg, ConNil, ConColChain, ConRowChain,    // contragredient
    CgH, CgGamma, CgJzero,                       // congruence
    ScH, ScDelta, ScJzero,                       // *congruence
    InPlus, InMinus, InZero,                     // real symmetric forms
};

inline const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::EqIdentity: return "identity";
        case BlockKind::EqZeroToF: return "zero-to-F";
        case BlockKind::EqFToZero: return "F-to-zero";
        case BlockKind::Companion: return "companion";
        case BlockKind::PenReg: return "regular";
        case BlockKind::PenNilpotentPair: return "nilpotent-pair";
        case BlockKind::PenColMin: return "col-min";
        case BlockKind::PenRowMin: return "row-min";
        case BlockKind::ConReg: return "regular";
        case BlockKind::ConNil: return "nil";
        case BlockKind::ConColChain: return "col-chain";
        case BlockKind::ConRowChain: return "row-chain";
        case BlockKind::CgH: return "H";
        case BlockKind::CgGamma: return "Gamma";
        case BlockKind::CgJzero: return "J-zero";
        case BlockKind::ScH: return "H";
        case BlockKind::ScDelta: return "Delta";
        case BlockKind::ScJzero: return "J-zero";
        case BlockKind::InPlus: return "plus";
        case BlockKind::InMinus: return "minus";
        case BlockKind::InZero: return "zero";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Block matrix constructors (the paper's literal displays).

// Companion matrix of q(x) = x^n + c_1 x^{n-1} + ... + c_n.
template <class K>
Matrix<K> companion(const Poly<K>& q) {
    if (!q.is_monic() || q.degree() < 1)
        fail("invalid-descriptor", "companion block needs a monic polynomial of degree >= 1");
    const int n = q.degree();
    Matrix<K> c(n, n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = FT<K>::one();
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -q.coeff(n - 1 - i);
    return c;
}

template <class K>
Matrix<K> jordan(int n, const K& lam) {
    Matrix<K> j(n, n);
    for (int i = 0; i < n; ++i) j.at(i, i) = lam;
    for (int i = 0; i + 1 < n; ++i) j.at(i, i + 1) = FT<K>::one();
    return j;
}

// L_n and R_n of Eq (1.4): (n-1)-by-n, L_1 = R_1 = 0_{01}.
template <class K>
Matrix<K> Lmat(int n) {
    Matrix<K> m(n - 1, n);
    for (int i = 0; i < n - 1; ++i) m.at(i, i) = FT<K>::one();
    return m;
}
template <class K>
Matrix<K> Rmat(int n) {
    Matrix<K> m(n - 1, n);
    for (int i = 0; i < n - 1; ++i) m.at(i, i + 1) = FT<K>::one();
    return m;
}

// [[0, I_n], [J_n(lambda), 0]]
template <class K>
Matrix<K> h_block(int n, const K& lam) {
    Matrix<K> h(2 * n, 2 * n);
    h.set_block(0, n, Matrix<K>::identity(n));
    h.set_block(n, 0, jordan(n, lam));
    return h;
}

// Gamma_n: two anti-diagonal bands of +-1, bottom row positive.
template <class K>
Matrix<K> gamma_block(int n) {
    Matrix<K> g(n, n);
    for (int i = 1; i <= n; ++i) {
        K s = (n - i) % 2 == 0 ? FT<K>::one() : -FT<K>::one();
        g.at(i - 1, n - i) = s;                      // (i, n+1-i)
        if (i >= 2) g.at(i - 1, n + 1 - i) = s;      // (i, n+2-i)
    }
    return g;
}

// Delta_n: anti-diagonal of 1 with i on the band above.
template <class K>
Matrix<K> delta_block(int n) {
    Matrix<K> d(n, n);
    for (int i = 1; i <= n; ++i) {
        d.at(i - 1, n - i) = FT<K>::one();
        if (i >= 2) d.at(i - 1, n + 1 - i) = FT<K>::imaginary();
    }
    return d;
}

// ---------------------------------------------------------------------------

template <class K>
struct Block {
    Problem problem;
    BlockKind kind;
    int n = 1;                  // size parameter
    Poly<K> q;                  // for Companion / Reg kinds
    K lam = FT<K>::zero();      // for H / Delta kinds

    static Block equiv(BlockKind k) { return {Problem::Equivalence, k, 1, {}, FT<K>::zero()}; }
    static Block sim(Poly<K> poly) {
        return {Problem::Similarity, BlockKind::Companion, poly.degree(), std::move(poly),
                FT<K>::zero()};
    }
    static Block pencil(BlockKind k, int n) { return {Problem::Pencil, k, n, {}, FT<K>::zero()}; }
    static Block pencil_reg(Poly<K> poly) {
        return {Problem::Pencil, BlockKind::PenReg, poly.degree(), std::move(poly),
                FT<K>::zero()};
    }
    static Block contra(BlockKind k, int n) {
        return {Problem::Contragredient, k, n, {}, FT<K>::zero()};
    }
    static Block contra_reg(Poly<K> poly) {
        return {Problem::Contragredient, BlockKind::ConReg, poly.degree(), std::move(poly),
                FT<K>::zero()};
    }
    static Block congr(BlockKind k, int n, K lam = FT<K>::zero()) {
        return {Problem::Congruence, k, n, {}, std::move(lam)};
    }
    static Block starcongr(BlockKind k, int n, K lam = FT<K>::zero()) {
        return {Problem::StarCongruence, k, n, {}, std::move(lam)};
    }
    static Block inertia(int sign) {
        return {Problem::InertiaForm,
                sign > 0 ? BlockKind::InPlus : sign < 0 ? BlockKind::InMinus : BlockKind::InZero,
                1,
                {},
                FT<K>::zero()};
    }
};

// total (rows, cols) of the block's matrices; for single-matrix problems
// rows == cols is the size of the square matrix.
template <class K>
std::pair<int, int> block_shape(const Block<K>& b) {
    switch (b.kind) {
        case BlockKind::EqIdentity: return {1, 1};
        case BlockKind::EqZeroToF: return {1, 0};
        case BlockKind::EqFToZero: return {0, 1};
        case BlockKind::Companion: return {b.n, b.n};
        case BlockKind::PenReg:
        case BlockKind::PenNilpotentPair: return {b.n, b.n};
        case BlockKind::PenColMin: return {b.n - 1, b.n};
        case BlockKind::PenRowMin: return {b.n, b.n - 1};
        case BlockKind::ConReg:
        case BlockKind::ConNil: return {b.n, b.n};
        case BlockKind::ConColChain: return {b.n - 1, b.n};  // A: F^n -> F^{n-1}
        case BlockKind::ConRowChain: return {b.n, b.n - 1};
        case BlockKind::CgH:
        case BlockKind::ScH: return {2 * b.n, 2 * b.n};
        case BlockKind::CgGamma:
        case BlockKind::CgJzero:
        case BlockKind::ScDelta:
        case BlockKind::ScJzero: return {b.n, b.n};
        case BlockKind::InPlus:
        case BlockKind::InMinus:
        case BlockKind::InZero: return {1, 1};
    }
    fail("invalid-descriptor", "unknown block kind");
}

namespace detail {
template <class K>
bool unimodular(const K& lam, double tol) {
    if constexpr (std::is_same_v<K, GaussRat>) {
        (void)tol;
        return lam.norm() == 1;
    } else if constexpr (std::is_same_v<K, Cplx>) {
        return std::abs(std::abs(lam) - 1.0) <= tol;
    } else {
        (void)tol;
        return lam == FT<K>::one() || lam == -FT<K>::one();
    }
}
template <class K>
bool modulus_gt_one(const K& lam, double tol) {
    if constexpr (std::is_same_v<K, GaussRat>) {
        (void)tol;
        return lam.norm() > 1;
    } else if constexpr (std::is_same_v<K, Cplx>) {
        return std::abs(lam) > 1.0 + tol;
    } else {
        (void)tol;
        return lam > FT<K>::one() || lam < -FT<K>::one();
    }
}
}  // namespace detail

template <class K>
void validate_block(const Block<K>& b, double tol = 1e-8) {
    auto need = [&](bool ok, const char* msg) {
        if (!ok) fail("invalid-descriptor", msg);
    };
    switch (b.kind) {
        case BlockKind::Companion:
        case BlockKind::PenReg:
        case BlockKind::ConReg: {
            need(b.q.is_monic() && b.q.degree() >= 1 && b.q.degree() == b.n,
                 "regular block needs a monic polynomial with n = deg q");
            if constexpr (FT<K>::exact) {
                auto fs = factor<K>(b.q);
                need(fs.size() == 1, "regular block polynomial must be a power of an irreducible");
            }
            break;
        }
        case BlockKind::PenNilpotentPair:
        case BlockKind::ConNil:
        case BlockKind::ConColChain:
        case BlockKind::ConRowChain:
        case BlockKind::PenColMin:
        case BlockKind::PenRowMin:
        case BlockKind::CgGamma:
        case BlockKind::CgJzero:
        case BlockKind::ScJzero:
            need(b.n >= 1, "block size must be >= 1");
            break;
        case BlockKind::CgH: {
            need(b.n >= 1, "block size must be >= 1");
            need(!FT<K>::is_zero(b.lam), "H block needs lambda != 0");
            K forbidden = (b.n + 1) % 2 == 0 ? FT<K>::one() : -FT<K>::one();
            need(!(b.lam == forbidden), "H block needs lambda != (-1)^(n+1)");
            break;
        }
        case BlockKind::ScH:
            need(b.n >= 1, "block size must be >= 1");
            need(detail::modulus_gt_one(b.lam, tol), "star H block needs |lambda| > 1");
            break;
        case BlockKind::ScDelta:
            need(b.n >= 1, "block size must be >= 1");
            need(detail::unimodular(b.lam, tol), "Delta block needs |mu| = 1");
            break;
        default: break;
    }
}

// Matrices of one block: one matrix for the single-matrix problems, the
// ordered pair for pencil / contragredient.
template <class K>
std::vector<Matrix<K>> build_block(const Block<K>& b, double tol = 1e-8) {
    validate_block(b, tol);
    switch (b.kind) {
        case BlockKind::EqIdentity: return {Matrix<K>::identity(1)};
        case BlockKind::EqZeroToF: return {Matrix<K>(1, 0)};
        case BlockKind::EqFToZero: return {Matrix<K>(0, 1)};
        case BlockKind::Companion: return {companion(b.q)};
        case BlockKind::PenReg: return {Matrix<K>::identity(b.n), companion(b.q)};
        case BlockKind::PenNilpotentPair:
            return {jordan(b.n, FT<K>::zero()), Matrix<K>::identity(b.n)};
        case BlockKind::PenColMin: return {Lmat<K>(b.n), Rmat<K>(b.n)};
        case BlockKind::PenRowMin:
            return {Lmat<K>(b.n).transpose(), Rmat<K>(b.n).transpose()};
        case BlockKind::ConReg: return {Matrix<K>::identity(b.n), companion(b.q)};
        case BlockKind::ConNil:
            return {jordan(b.n, FT<K>::zero()), Matrix<K>::identity(b.n)};
        case BlockKind::ConColChain: return {Lmat<K>(b.n), Rmat<K>(b.n).transpose()};
        case BlockKind::ConRowChain: return {Lmat<K>(b.n).transpose(), Rmat<K>(b.n)};
        case BlockKind::CgH:
        case BlockKind::ScH: return {h_block(b.n, b.lam)};
        case BlockKind::CgGamma: return {gamma_block<K>(b.n)};
        case BlockKind::ScDelta: return {b.lam * delta_block<K>(b.n)};
        case BlockKind::CgJzero:
        case BlockKind::ScJzero: return {jordan(b.n, FT<K>::zero())};
        case BlockKind::InPlus: return {Matrix<K>{{FT<K>::one()}}};
        case BlockKind::InMinus: return {Matrix<K>{{-FT<K>::one()}}};
        case BlockKind::InZero: return {Matrix<K>(1, 1)};
    }
    fail("invalid-descriptor", "unknown block kind");
}

// ---------------------------------------------------------------------------
// Decompositions: multisets of blocks with a canonical order.

template <class K>
int cmp_poly(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k)
        if (int c = cmp_scalar(a.coeff(k), b.coeff(k))) return c;
    return 0;
}

template <class K>
int cmp_block(const Block<K>& a, const Block<K>& b) {
    if (a.kind != b.kind) return (int)a.kind < (int)b.kind ? -1 : 1;
    if (a.n != b.n) return a.n < b.n ? -1 : 1;
    if (int c = cmp_poly(a.q, b.q)) return c;
    return cmp_scalar(a.lam, b.lam);
}

template <class K>
struct Decomposition {
    Problem problem;
    std::vector<Block<K>> blocks;

    void sort() {
        std::sort(blocks.begin(), blocks.end(),
                  [](const Block<K>& a, const Block<K>& b) { return cmp_block(a, b) < 0; });
    }

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        if (a.problem != b.problem || a.blocks.size() != b.blocks.size()) return false;
        Decomposition x = a, y = b;
        x.sort();
        y.sort();
        for (size_t k = 0; k < x.blocks.size(); ++k)
            if (cmp_block(x.blocks[k], y.blocks[k]) != 0) return false;
        return true;
    }
};

// approximate multiset equality for the float backend
inline bool near(const Cplx& a, const Cplx& b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline bool blocks_match(const Block<Cplx>& a, const Block<Cplx>& b, double tol) {
    if (a.kind != b.kind || a.n != b.n) return false;
    if (a.q.degree() != b.q.degree()) return false;
    for (int k = 0; k <= a.q.degree(); ++k)
        if (!near(a.q.coeff(k), b.q.coeff(k), tol)) return false;
    return near(a.lam, b.lam, tol);
}

inline bool decompositions_match(const Decomposition<Cplx>& a, const Decomposition<Cplx>& b,
                                 double tol) {
    if (a.problem != b.problem || a.blocks.size() != b.blocks.size()) return false;
    std::vector<Block<Cplx>> pool = b.blocks;
    for (auto& blk : a.blocks) {
        bool found = false;
        for (size_t k = 0; k < pool.size(); ++k)
            if (blocks_match(blk, pool[k], tol)) {
                pool.erase(pool.begin() + k);
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// realize: block multiset -> matrices / representation

template <class K>
std::vector<Matrix<K>> realize_matrices(const Decomposition<K>& d, double tol = 1e-8) {
    size_t nmats = d.problem == Problem::Pencil || d.problem == Problem::Contragredient ? 2 : 1;
    Decomposition<K> s = d;
    s.sort();
    std::vector<Matrix<K>> out(nmats);
    for (auto& b : s.blocks) {
        if (b.problem != d.problem)
            fail("invalid-descriptor", "mixed problems inside one decomposition");
        auto mats = build_block(b, tol);
        for (size_t k = 0; k < nmats; ++k) out[k] = block_diag(out[k], mats[k]);
    }
    return out;
}

template <class K>
MixedGraph problem_shape(Problem p) {
    switch (p) {
        case Problem::Equivalence: return shape_single_arrow();
        case Problem::Similarity: return shape_loop();
        case Problem::Pencil: return shape_kronecker();
        case Problem::Contragredient: return shape_pair();
        case Problem::Congruence:
        case Problem::StarCongruence:
        case Problem::InertiaForm: return shape_form();
    }
    fail("invalid-descriptor", "unknown problem");
}

template <class K>
Rep<K> realize(const Decomposition<K>& d, double tol = 1e-8) {
    auto mats = realize_matrices(d, tol);
    Rep<K> r;
    r.graph = problem_shape<K>(d.problem);
    switch (d.problem) {
        case Problem::Equivalence:
            r.dims = {mats[0].cols(), mats[0].rows()};
            r.maps["a"] = mats[0];
            break;
        case Problem::Similarity:
            r.dims = {mats[0].rows()};
            r.maps["a"] = mats[0];
            break;
        case Problem::Pencil:
            r.dims = {mats[0].cols(), mats[0].rows()};
            r.maps["a"] = mats[0];
            r.maps["b"] = mats[1];
            break;
        case Problem::Contragredient:
            r.dims = {mats[0].cols(), mats[0].rows()};
            r.maps["a"] = mats[0];
            r.maps["b"] = mats[1];
            break;
        case Problem::Congruence:
        case Problem::InertiaForm:
            r.dims = {mats[0].rows()};
            r.forms["f"] = mats[0];
            break;
        case Problem::StarCongruence:
            r.dims = {mats[0].rows()};
            r.forms["f"] = mats[0];
            r.invol = Involution::Conjugation;
            break;
    }
    r.validate();
    return r;
}

}  // namespace qmx
