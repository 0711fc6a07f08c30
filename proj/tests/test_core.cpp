#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmx/factor.hpp"
#include "qmx/linalg.hpp"
#include "qmx/smith.hpp"
#include "testutil.hpp"

using namespace qmx;

TEST_CASE("scalar parsing and printing round-trips") {
    CHECK(rat_str(parse_rat("3/2")) == "3/2");
    CHECK(rat_str(parse_rat("-6/4")) == "-3/2");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);

    CHECK(gauss_str(parse_gauss("1+2i")) == "1+2i");
    CHECK(gauss_str(parse_gauss("1-2i")) == "1-2i");
    CHECK(gauss_str(parse_gauss("-i")) == "-i");
    CHECK(gauss_str(parse_gauss("3/4i")) == "3/4i");
    CHECK(gauss_str(parse_gauss("1/2+3/4i")) == "1/2+3/4i");
    CHECK(gauss_str(parse_gauss("5")) == "5");

    CHECK(parse_cplx("1.5-2i") == Cplx(1.5, -2));
    CHECK(cplx_str(parse_cplx(cplx_str(Cplx(0.1, -0.3)))) == cplx_str(Cplx(0.1, -0.3)));
}

TEST_CASE("involve: spec examples") {
    CHECK(involve(make_rat(3, 2), Involution::Identity) == make_rat(3, 2));
    GaussRat z(Rat(1), Rat(2));
    CHECK(involve(z, Involution::Conjugation) == GaussRat(Rat(1), Rat(-2)));
    CHECK(involve(z, Involution::Identity) == z);
}

TEST_CASE("involve is a self-inverse ring automorphism") {
    test::Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        GaussRat a = test::rand_scalar<GaussRat>(rng);
        GaussRat b = test::rand_scalar<GaussRat>(rng);
        auto c = [](const GaussRat& x) { return involve(x, Involution::Conjugation); };
        CHECK(c(c(a)) == a);
        CHECK(c(a + b) == c(a) + c(b));
        CHECK(c(a * b) == c(a) * c(b));
    }
}

TEST_CASE("rank: spec examples") {
    CHECK(rank(Matrix<Rat>::identity(3)) == 3);
    CHECK(rank(Matrix<Rat>(2, 4)) == 0);
    Matrix<Rat> m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rank(m) == 1);
    // zero-dimensional matrices are legal values
    CHECK(rank(Matrix<Rat>(0, 3)) == 0);
    CHECK(rank(Matrix<Rat>(3, 0)) == 0);
}

TEST_CASE("rank(M) == rank(M^T), serial == parallel") {
    test::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        auto m = test::rand_matrix<Rat>(rng, (int)test::rand_int(rng, 0, 6),
                                        (int)test::rand_int(rng, 0, 6));
        CHECK(rank(m) == rank(m.transpose()));
        auto a = test::rand_matrix<Rat>(rng, 4, 5);
        auto b = test::rand_matrix<Rat>(rng, 5, 3);
        CHECK(mul_serial(a, b) == mul(a, b));
        CHECK(echelon_serial(m).rref == echelon(m).rref);
    }
}

TEST_CASE("solve, inverse, kernel") {
    test::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        auto s = test::rand_invertible<Rat>(rng, 4);
        auto inv = inverse(s);
        CHECK(s * inv == Matrix<Rat>::identity(4));
        auto m = test::rand_matrix<Rat>(rng, 3, 5);
        auto k = kernel_basis(m);
        CHECK(k.cols() == 5 - rank(m));
        if (k.cols()) {
            auto z = m * k;
            CHECK(z == Matrix<Rat>(3, k.cols()));
        }
    }
}

TEST_CASE("polynomial arithmetic and charpoly") {
    Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> p = x * x + Poly<Rat>::constant(Rat(1));
    CHECK(p.degree() == 2);
    CHECK(p.str() == "x^2 + 1");
    auto [q, r] = divmod(p * p + x, p);
    CHECK(q == p);
    CHECK(r == x);

    Matrix<Rat> rot{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    auto cp = charpoly(rot);
    CHECK(Poly<Rat>(cp) == p);  // x^2 + 1

    // degree of product = sum of degrees over an integral domain
    test::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> ac, bc;
        for (int i = 0; i <= (int)test::rand_int(rng, 0, 5); ++i)
            ac.push_back(test::rand_scalar<Rat>(rng));
        for (int i = 0; i <= (int)test::rand_int(rng, 0, 5); ++i)
            bc.push_back(test::rand_scalar<Rat>(rng));
        Poly<Rat> a(ac), b(bc);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly parse round-trip") {
    auto p = parse_poly<Rat>("x^3 - 2*x + 1/2");
    CHECK(p.coeff(3) == 1);
    CHECK(p.coeff(1) == -2);
    CHECK(p.coeff(0) == make_rat(1, 2));
    CHECK(parse_poly<Rat>(p.str()) == p);
    auto g = parse_poly<GaussRat>("x^2 + (1+2i)*x - i");
    CHECK(g.coeff(1) == GaussRat(Rat(1), Rat(2)));
    CHECK(g.coeff(0) == GaussRat(Rat(0), Rat(-1)));
    CHECK(parse_poly<GaussRat>(g.str()) == g);
}

TEST_CASE("factor: spec examples") {
    Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> one = Poly<Rat>::constant(Rat(1));

    auto f1 = factor<Rat>(x * x + one);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == x * x + one);
    CHECK(f1[0].second == 1);

    auto f2 = factor<Rat>(x * x * x - x);
    CHECK(f2.size() == 3);
    for (auto& [p, m] : f2) {
        CHECK(p.degree() == 1);
        CHECK(m == 1);
    }

    Poly<GaussRat> xi = Poly<GaussRat>::x();
    Poly<GaussRat> onei = Poly<GaussRat>::constant(FT<GaussRat>::one());
    auto f3 = factor<GaussRat>(xi * xi + onei);
    REQUIRE(f3.size() == 2);
    for (auto& [p, m] : f3) {
        CHECK(p.degree() == 1);
        CHECK(m == 1);
        // roots are +-i
        GaussRat root = -p.coeff(0);
        CHECK(root * root == -FT<GaussRat>::one());
    }
}

TEST_CASE("factor: random products re-expand exactly") {
    test::Rng rng(17);
    for (int t = 0; t < 15; ++t) {
        // build a product of small random monic polynomials, factor, re-expand
        Poly<Rat> prod = Poly<Rat>::constant(Rat(1));
        int nf = (int)test::rand_int(rng, 1, 3);
        for (int k = 0; k < nf; ++k) {
            int d = (int)test::rand_int(rng, 1, 3);
            std::vector<Rat> c;
            for (int i = 0; i < d; ++i) c.push_back(Rat(test::rand_int(rng, -3, 3)));
            c.push_back(Rat(1));
            prod = prod * Poly<Rat>(c);
        }
        auto fs = factor<Rat>(prod);
        Poly<Rat> re = Poly<Rat>::constant(Rat(1));
        for (auto& [p, m] : fs) re = re * poly_pow(p, m);
        CHECK(re == prod.monic());
    }
}

TEST_CASE("factor of a degree-12 product with repeated factors") {
    // (x^2+1)^2 (x^2-2)^2 (x^4+x+1) -- mixes repeated and high-degree parts
    Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> one = Poly<Rat>::constant(Rat(1));
    Poly<Rat> p1 = x * x + one;
    Poly<Rat> p2 = x * x - Poly<Rat>::constant(Rat(2));
    Poly<Rat> p3 = poly_pow(x, 4) + x + one;
    auto fs = factor<Rat>(poly_pow(p1, 2) * poly_pow(p2, 2) * p3);
    int total = 0;
    for (auto& [p, m] : fs) total += p.degree() * m;
    CHECK(total == 12);
    bool saw_p3 = false;
    for (auto& [p, m] : fs)
        if (p == p3) saw_p3 = true;
    CHECK(saw_p3);
}

TEST_CASE("smith: spec examples") {
    Matrix<Rat> rot{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    auto inv = smith_char(rot);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == Poly<Rat>::constant(Rat(1)));
    CHECK(inv[1] == parse_poly<Rat>("x^2 + 1"));

    Matrix<Rat> z1(1, 1);
    auto inv2 = smith_char(z1);
    REQUIRE(inv2.size() == 1);
    CHECK(inv2[0] == Poly<Rat>::x());

    auto inv3 = smith_char(Matrix<Rat>::identity(2));
    REQUIRE(inv3.size() == 2);
    CHECK(inv3[0] == parse_poly<Rat>("x - 1"));
    CHECK(inv3[1] == parse_poly<Rat>("x - 1"));
}

TEST_CASE("smith invariant under random unimodular multiplication") {
    test::Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        auto a = test::rand_matrix<Rat>(rng, 3, 3, 2);
        auto base = smith_char(a);
        // unimodular polynomial matrices: elementary transforms of xI - a
        MatPoly<Rat> m = char_matrix(a);
        for (int k = 0; k < 6; ++k) {
            int i = (int)test::rand_int(rng, 0, 2), j = (int)test::rand_int(rng, 0, 2);
            if (i == j) continue;
            Poly<Rat> f{{test::rand_scalar<Rat>(rng)}};
            if (test::rand_int(rng, 0, 1)) f = f * Poly<Rat>::x();
            if (test::rand_int(rng, 0, 1)) {
                for (int c = 0; c < 3; ++c) m.at(i, c) += f * m.at(j, c);
            } else {
                for (int r = 0; r < 3; ++r) m.at(r, i) += f * m.at(r, j);
            }
        }
        auto after = smith_invariant_factors(m);
        for (size_t k = 0; k < base.size(); ++k) CHECK(base[k] == after[k]);
    }
}

TEST_CASE("charpoly equals product of invariant factors") {
    test::Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        auto a = test::rand_matrix<Rat>(rng, 4, 4, 2);
        auto inv = smith_char(a);
        Poly<Rat> prod = Poly<Rat>::constant(Rat(1));
        for (auto& d : inv) prod = prod * d;
        CHECK(prod == Poly<Rat>(charpoly(a)));
    }
}
