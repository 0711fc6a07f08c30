#pragma once

// Exact factorization into powers of irreducibles.
//   Q:    squarefree split, then factor mod p (distinct-degree + equal-degree
//         splitting), Hensel lift to p^k past the coefficient bound, and
//         subset recombination.
//   Q(i): Trager's norm method on top of the rational factorizer.
// Budget overruns raise factorization-incomplete; a wrong factor is never
// returned (the product is re-checked against the input).

#include <cstdint>
#include <random>

#include "qmx/polynomial.hpp"

namespace qmx {
namespace fct {

// ----- polynomials over F_p (p odd, p < 2^31), low-to-high ------------------

using PPoly = std::vector<int64_t>;

inline void pp_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int pp_deg(const PPoly& a) { return (int)a.size() - 1; }

inline PPoly pp_mul(const PPoly& a, const PPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(r);
    return r;
}

inline PPoly pp_sub(PPoly a, const PPoly& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    pp_trim(a);
    return a;
}

inline int64_t pp_inv(int64_t a, int64_t p) {  // modular inverse, p prime
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

inline std::pair<PPoly, PPoly> pp_divmod(const PPoly& a, const PPoly& b, int64_t p) {
    PPoly rem = a, quo;
    int db = pp_deg(b);
    if (pp_deg(a) < db) return {{}, rem};
    quo.assign(a.size() - db, 0);
    int64_t inv = pp_inv(b.back(), p);
    for (int k = pp_deg(a); k >= db; --k) {
        int64_t f = rem[k] % p * inv % p;
        if (f) {
            quo[k - db] = f;
            for (int j = 0; j <= db; ++j)
                rem[k - db + j] = ((rem[k - db + j] - f * b[j]) % p + p) % p;
        }
        rem[k] = 0;
    }
    pp_trim(rem);
    pp_trim(quo);
    return {quo, rem};
}

inline PPoly pp_monic(PPoly a, int64_t p) {
    if (a.empty()) return a;
    int64_t inv = pp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline PPoly pp_gcd(PPoly a, PPoly b, int64_t p) {
    while (!b.empty()) {
        PPoly r = pp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pp_monic(a, p);
}

inline PPoly pp_powmod(PPoly base, const mpz_class& e, const PPoly& f, int64_t p) {
    PPoly r{1};
    base = pp_divmod(base, f, p).second;
    for (long bit = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
        r = pp_divmod(pp_mul(r, r, p), f, p).second;
        if (mpz_tstbit(e.get_mpz_t(), bit))
            r = pp_divmod(pp_mul(r, base, p), f, p).second;
    }
    return r;
}

// Bezout: s*a + t*b = 1 for coprime a, b.
inline void pp_bezout(const PPoly& a, const PPoly& b, int64_t p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        PPoly ns = pp_sub(s0, pp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(ns);
        PPoly nt = pp_sub(t0, pp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (pp_deg(r0) != 0) fail("internal-inconsistency", "bezout of non-coprime polynomials");
    int64_t inv = pp_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = s0;
    t = t0;
}

// Factors a monic squarefree polynomial mod p into monic irreducibles.
inline std::vector<PPoly> pp_factor_squarefree(PPoly f, int64_t p, std::mt19937_64& rng) {
    std::vector<std::pair<PPoly, int>> dd;  // (product of degree-d factors, d)
    PPoly x{0, 1};
    PPoly g = x;
    PPoly rest = f;
    for (int d = 1; 2 * d <= pp_deg(rest); ++d) {
        g = pp_powmod(g, p, rest, p);
        PPoly w = pp_gcd(rest, pp_sub(g, x, p), p);
        if (pp_deg(w) > 0) {
            dd.push_back({w, d});
            rest = pp_divmod(rest, w, p).first;
            g = pp_divmod(g, rest, p).second;
        }
    }
    if (pp_deg(rest) > 0) dd.push_back({rest, pp_deg(rest)});

    std::vector<PPoly> out;
    // Cantor-Zassenhaus equal-degree splitting.
    std::vector<std::pair<PPoly, int>> stack = dd;
    mpz_class pz(p);
    while (!stack.empty()) {
        auto [h, d] = stack.back();
        stack.pop_back();
        if (pp_deg(h) == d) {
            out.push_back(pp_monic(h, p));
            continue;
        }
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), d);
        e = (e - 1) / 2;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) fail("factorization-incomplete", "equal-degree split stalled");
            PPoly a(pp_deg(h), 0);
            for (auto& c : a) c = (int64_t)(rng() % (uint64_t)p);
            pp_trim(a);
            if (pp_deg(a) < 1) continue;
            PPoly g1 = pp_gcd(h, a, p);
            if (pp_deg(g1) > 0 && pp_deg(g1) < pp_deg(h)) {
                stack.push_back({g1, d});
                stack.push_back({pp_divmod(h, g1, p).first, d});
                break;
            }
            PPoly b = pp_powmod(a, e, h, p);
            b = pp_sub(b, PPoly{1}, p);
            PPoly g2 = pp_gcd(h, b, p);
            if (pp_deg(g2) > 0 && pp_deg(g2) < pp_deg(h)) {
                stack.push_back({g2, d});
                stack.push_back({pp_divmod(h, g2, p).first, d});
                break;
            }
        }
    }
    return out;
}

// ----- integer polynomials ---------------------------------------------------

using ZPoly = std::vector<mpz_class>;

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int zp_deg(const ZPoly& a) { return (int)a.size() - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

// Division by a monic divisor; returns (quotient, remainder) over Z.
inline std::pair<ZPoly, ZPoly> zp_divmod_monic(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a, quo;
    int db = zp_deg(b);
    if (zp_deg(a) < db) return {{}, rem};
    quo.assign(a.size() - db, mpz_class(0));
    for (int k = zp_deg(a); k >= db; --k) {
        mpz_class f = rem[k];
        if (f != 0) {
            quo[k - db] = f;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
        }
    }
    zp_trim(rem);
    zp_trim(quo);
    return {quo, rem};
}

inline mpz_class zp_content(const ZPoly& a) {
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// ----- Hensel lifting --------------------------------------------------------

inline ZPoly zm_reduce(ZPoly a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    zp_trim(a);
    return a;
}

inline ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return zm_reduce(zp_mul(a, b), m);
}

inline ZPoly zm_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zm_reduce(std::move(a), m);
}

inline ZPoly zm_add(ZPoly a, const ZPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zm_reduce(std::move(a), m);
}

// Division by a monic divisor in Z/m.
inline std::pair<ZPoly, ZPoly> zm_divmod_monic(const ZPoly& a, const ZPoly& b,
                                               const mpz_class& m) {
    auto [q, r] = zp_divmod_monic(a, b);
    return {zm_reduce(std::move(q), m), zm_reduce(std::move(r), m)};
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// to the same congruences mod m^2. f and h monic, g monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                        const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zm_sub(f, zp_mul(g, h), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZPoly g1 = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
    ZPoly h1 = zm_add(h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
    s = zm_sub(s, d, m2);
    t = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
}

inline ZPoly pp_to_zp(const PPoly& a) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (long)a[i];
    return r;
}

// Lifts the factorization F = prod(facs) (mod p) to (mod P), F monic.
inline std::vector<ZPoly> multifactor_lift(const ZPoly& F, const std::vector<PPoly>& facs,
                                           int64_t p, const mpz_class& P) {
    if (facs.size() == 1) return {zm_reduce(F, P)};
    size_t half = facs.size() / 2;
    std::vector<PPoly> L(facs.begin(), facs.begin() + half);
    std::vector<PPoly> R(facs.begin() + half, facs.end());
    PPoly g0{1}, h0{1};
    for (auto& u : L) g0 = pp_mul(g0, u, p);
    for (auto& u : R) h0 = pp_mul(h0, u, p);
    PPoly s0, t0;
    pp_bezout(g0, h0, p, s0, t0);
    ZPoly g = pp_to_zp(g0), h = pp_to_zp(h0), s = pp_to_zp(s0), t = pp_to_zp(t0);
    mpz_class m(p);
    while (m < P) {
        hensel_step(zm_reduce(F, m * m), g, h, s, t, m);
        m *= m;
    }
    g = zm_reduce(g, P);
    h = zm_reduce(h, P);
    auto left = multifactor_lift(g, L, p, P);
    auto right = multifactor_lift(h, R, p, P);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// ----- Zassenhaus over Z -----------------------------------------------------

inline void zp_symmetric(ZPoly& a, const mpz_class& P) {
    mpz_class half = P / 2;
    for (auto& c : a)
        if (c > half) c -= P;
    zp_trim(a);
}

// Factors a monic squarefree integer polynomial of degree >= 1.
inline std::vector<ZPoly> zassenhaus_monic(const ZPoly& F) {
    const int n = zp_deg(F);
    if (n == 1) return {F};

    static const int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                     101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    int64_t p = 0;
    PPoly fp;
    for (int64_t cand : primes) {
        PPoly f(F.size());
        for (size_t i = 0; i < F.size(); ++i) {
            mpz_class c = F[i] % cand;
            if (c < 0) c += cand;
            f[i] = c.get_si();
        }
        pp_trim(f);
        if (pp_deg(f) != n) continue;  // lc vanished (cannot happen, monic)
        PPoly d(f.size() - 1);
        for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (int64_t)i % cand * f[i] % cand;
        pp_trim(d);
        if (pp_deg(pp_gcd(f, d, cand)) == 0) {
            p = cand;
            fp = f;
            break;
        }
    }
    if (!p) fail("factorization-incomplete", "no squarefree prime found");

    std::mt19937_64 rng(0x5eed1234abcdULL + (uint64_t)n * 1315423911ULL);
    std::vector<PPoly> modular = pp_factor_squarefree(fp, p, rng);
    if (modular.size() == 1) return {F};
    if (modular.size() > 24)
        fail("factorization-incomplete", "too many modular factors for recombination");

    // Coefficient bound (coarse Landau-Mignotte style) and lifting target.
    mpz_class maxc = 0;
    for (auto& c : F) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class B = mpz_class(n + 1) * maxc;
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n + 1);
    B *= two_n;
    mpz_class P(p);
    while (P < 2 * B + 1) P *= P;
    std::vector<ZPoly> lifted = multifactor_lift(zm_reduce(F, P), modular, p, P);

    // Subset recombination, ascending cardinality.
    std::vector<ZPoly> out;
    ZPoly rest = F;
    std::vector<int> alive((int)lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = (int)i;
    long tried = 0;
    for (int card = 1; (int)alive.size() >= 2 * card;) {
        std::vector<int> idx(card);
        for (int i = 0; i < card; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            if (++tried > (1L << 22))
                fail("factorization-incomplete", "recombination budget exceeded");
            ZPoly cand{1};
            for (int i : idx) cand = zm_mul(cand, lifted[alive[i]], P);
            zp_symmetric(cand, P);
            auto [q, r] = zp_divmod_monic(rest, cand);
            if (r.empty()) {
                out.push_back(cand);
                std::vector<int> next;
                for (size_t k = 0, j = 0; k < alive.size(); ++k) {
                    if (j < idx.size() && (int)k == idx[j]) {
                        ++j;
                        continue;
                    }
                    next.push_back(alive[k]);
                }
                alive = std::move(next);
                rest = q;
                found = true;
                break;
            }
            // next combination
            int i = card - 1;
            while (i >= 0 && idx[i] == (int)alive.size() - card + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (zp_deg(rest) > 0) out.push_back(rest);
    return out;
}

}  // namespace fct

// ----- public API ------------------------------------------------------------

template <class K>
std::vector<std::pair<Poly<K>, int>> factor(const Poly<K>& p);

// Over Q: monic input, returns monic irreducible factors with multiplicity.
template <>
inline std::vector<std::pair<Poly<Rat>, int>> factor<Rat>(const Poly<Rat>& p) {
    if (p.is_zero()) fail("invalid-argument", "factor of zero polynomial");
    std::vector<std::pair<Poly<Rat>, int>> out;
    for (auto& [g, mult] : squarefree_decomposition(p)) {
        if (g.degree() == 1) {
            out.push_back({g, mult});
            continue;
        }
        // clear denominators -> primitive integer polynomial
        mpz_class den = 1;
        for (auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                           c.get_den().get_mpz_t());
        fct::ZPoly F(g.coeffs().size());
        for (size_t i = 0; i < F.size(); ++i) {
            Rat c = g.coeff((int)i) * Rat(den);
            F[i] = c.get_num();
        }
        mpz_class cont = fct::zp_content(F);
        for (auto& c : F) c /= cont;
        // monicize: G(y) = lc^(n-1) F(y/lc)
        mpz_class lc = F.back();
        const int n = fct::zp_deg(F);
        fct::ZPoly G(F.size());
        mpz_class pw = 1;
        for (int k = n; k >= 0; --k) {
            G[k] = F[k] * pw;
            if (k) pw *= lc;
        }
        for (auto& u : fct::zassenhaus_monic(G)) {
            // back-substitute y = lc*x, then make monic over Q
            std::vector<Rat> v(u.size());
            mpz_class s = 1;
            for (size_t k = 0; k < u.size(); ++k) {
                v[k] = Rat(u[k] * s);
                s *= lc;
            }
            out.push_back({Poly<Rat>(std::move(v)).monic(), mult});
        }
    }
    // verify: re-expanding reproduces p (monic part)
    Poly<Rat> check = Poly<Rat>::constant(Rat(1));
    for (auto& [f, m] : out) check = check * poly_pow(f, m);
    if (check != p.monic())
        fail("factorization-incomplete", "verification of factorization failed");
    return out;
}

// Over Q(i): Trager's norm method.
template <>
inline std::vector<std::pair<Poly<GaussRat>, int>> factor<GaussRat>(
    const Poly<GaussRat>& p) {
    if (p.is_zero()) fail("invalid-argument", "factor of zero polynomial");
    std::vector<std::pair<Poly<GaussRat>, int>> out;
    const GaussRat iu = FT<GaussRat>::imaginary();
    for (auto& [g, mult] : squarefree_decomposition(p)) {
        if (g.degree() == 1) {
            out.push_back({g, mult});
            continue;
        }
        long smax = 2L * g.degree() * g.degree() + 4;
        for (long s = 0;; ++s) {
            if (s > smax) fail("factorization-incomplete", "no squarefree norm shift found");
            GaussRat shift = GaussRat(Rat(-s)) * iu;
            Poly<GaussRat> gs = g.shift(shift);  // gs(x) = g(x - s*i)
            Poly<GaussRat> N = gs * gs.conj_coeffs();
            std::vector<Rat> nr(N.coeffs().size());
            bool real_ok = true;
            for (size_t k = 0; k < nr.size(); ++k) {
                if (N.coeff((int)k).im != 0) real_ok = false;
                nr[k] = N.coeff((int)k).re;
            }
            if (!real_ok) fail("internal-inconsistency", "norm is not rational");
            Poly<Rat> Nq(std::move(nr));
            if (!is_squarefree(Nq)) continue;
            GaussRat unshift = GaussRat(Rat(s)) * iu;
            for (auto& [nj, m1] : factor<Rat>(Nq)) {
                (void)m1;
                std::vector<GaussRat> lift(nj.coeffs().size());
                for (size_t k = 0; k < lift.size(); ++k) lift[k] = GaussRat(nj.coeff((int)k));
                Poly<GaussRat> h = poly_gcd(gs, Poly<GaussRat>(std::move(lift)));
                if (h.degree() >= 1) out.push_back({h.shift(unshift).monic(), mult});
            }
            break;
        }
    }
    Poly<GaussRat> check = Poly<GaussRat>::constant(FT<GaussRat>::one());
    for (auto& [f, m] : out) check = check * poly_pow(f, m);
    if (check != p.monic())
        fail("factorization-incomplete", "verification of factorization failed");
    return out;
}

template <>
inline std::vector<std::pair<Poly<Cplx>, int>> factor<Cplx>(const Poly<Cplx>&) {
    fail("domain-not-exact", "polynomial factorization needs an exact domain");
}

// Elementary divisors of a list of invariant factors: each invariant factor
// splits into powers of irreducibles.
template <class K>
std::vector<Poly<K>> elementary_divisors(const std::vector<Poly<K>>& invariant_factors) {
    std::vector<Poly<K>> out;
    for (auto& d : invariant_factors) {
        if (d.degree() < 1) continue;
        for (auto& [p, k] : factor<K>(d)) out.push_back(poly_pow(p, k));
    }
    return out;
}

}  // namespace qmx
