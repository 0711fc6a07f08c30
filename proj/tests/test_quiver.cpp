#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "qmx/census.hpp"
#include "qmx/io.hpp"
#include "qmx/rep.hpp"
#include "qmx/tits.hpp"
#include "testutil.hpp"

using namespace qmx;

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

static Rep<Rat> arrow_rep(Matrix<Rat> m) {
    Rep<Rat> r;
    r.graph = shape_single_arrow();
    r.dims = {m.cols(), m.rows()};
    r.maps["a"] = std::move(m);
    r.validate();
    return r;
}

TEST_CASE("is_morphism: spec examples") {
    // A: Q->Q by [2], B: Q->Q by [6], phi = ([1],[3]): 3*2 = 6*1
    auto A = arrow_rep(Matrix<Rat>{{Rat(2)}});
    auto B = arrow_rep(Matrix<Rat>{{Rat(6)}});
    Morphism<Rat> f{A, B, {Matrix<Rat>{{Rat(1)}}, Matrix<Rat>{{Rat(3)}}}};
    CHECK(is_morphism(f));
    CHECK(is_isomorphism(f));

    CHECK(is_morphism(identity_morphism(A)));
    CHECK(is_isomorphism(identity_morphism(A)));

    Morphism<Rat> zero{A, B, {Matrix<Rat>(1, 1), Matrix<Rat>(1, 1)}};
    CHECK(is_morphism(zero));
    CHECK_FALSE(is_isomorphism(zero));

    // wrong scaling is not a morphism
    Morphism<Rat> bad{A, B, {Matrix<Rat>{{Rat(1)}}, Matrix<Rat>{{Rat(1)}}}};
    CHECK_FALSE(is_morphism(bad));

    Rep<Rat> other = zero_rep<Rat>(shape_loop());
    Morphism<Rat> mismatched{A, other, {}};
    CHECK_THROWS_AS(is_morphism(mismatched), Error);
}

TEST_CASE("morphisms compose; isomorphism inverse is an isomorphism") {
    test::Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        auto A = arrow_rep(test::rand_matrix<Rat>(rng, 2, 2));
        auto S1 = test::rand_invertible<Rat>(rng, 2);
        auto S2 = test::rand_invertible<Rat>(rng, 2);
        // B = S2 A S1^{-1} makes (S1, S2) a morphism A -> B
        auto B = arrow_rep(S2 * A.maps.at("a") * inverse(S1));
        Morphism<Rat> f{A, B, {S1, S2}};
        REQUIRE(is_morphism(f));
        CHECK(is_isomorphism(f));
        Morphism<Rat> finv{B, A, {inverse(S1), inverse(S2)}};
        CHECK(is_isomorphism(finv));
        auto C = arrow_rep(test::rand_matrix<Rat>(rng, 2, 2));
        auto T1 = test::rand_invertible<Rat>(rng, 2);
        auto T2 = test::rand_invertible<Rat>(rng, 2);
        auto D = arrow_rep(T2 * B.maps.at("a") * inverse(T1));
        Morphism<Rat> gm{B, D, {T1, T2}};
        REQUIRE(is_morphism(gm));
        CHECK(is_morphism(compose(gm, f)));
    }
}

TEST_CASE("direct_sum: spec examples") {
    auto A = arrow_rep(Matrix<Rat>{{Rat(1)}});
    // 0 -> Q on the same quiver: dims (0, 1), map is 1x0
    Rep<Rat> B;
    B.graph = shape_single_arrow();
    B.dims = {0, 1};
    B.maps["a"] = Matrix<Rat>(1, 0);
    B.validate();
    auto S = direct_sum(A, B);
    CHECK(S.dims == std::vector<int>{1, 2});
    Matrix<Rat> expect{{Rat(1)}, {Rat(0)}};
    CHECK(S.maps.at("a") == expect);

    // dimension vectors add componentwise
    Rep<Rat> C;
    C.graph = shape_single_arrow();
    C.dims = {1, 2};
    C.maps["a"] = Matrix<Rat>(2, 1);
    Rep<Rat> D;
    D.graph = shape_single_arrow();
    D.dims = {2, 1};
    D.maps["a"] = Matrix<Rat>(1, 2);
    CHECK(direct_sum(C, D).dims == std::vector<int>{3, 3});

    // A + zero rep keeps the matrix (up to trivial padding)
    auto Z = zero_rep<Rat>(shape_single_arrow());
    CHECK(direct_sum(A, Z).maps.at("a") == A.maps.at("a"));
}

TEST_CASE("direct sum respects edge Gram matrices and involution") {
    Rep<GaussRat> F1, F2;
    F1.graph = F2.graph = shape_form();
    F1.invol = F2.invol = Involution::Conjugation;
    F1.dims = {1};
    F2.dims = {1};
    F1.forms["f"] = Matrix<GaussRat>{{GaussRat(Rat(1), Rat(2))}};
    F2.forms["f"] = Matrix<GaussRat>{{GaussRat(Rat(3))}};
    auto S = direct_sum(F1, F2);
    CHECK(S.forms.at("f").at(0, 0) == GaussRat(Rat(1), Rat(2)));
    CHECK(S.forms.at("f").at(1, 1) == GaussRat(Rat(3)));
    CHECK(S.forms.at("f").at(0, 1) == GaussRat());
}

TEST_CASE("serialization round trip and parse errors") {
    std::string text = slurp(std::string(QMX_FIXTURES) + "/example1_quiver.json");
    MixedGraph g = graph_from_json(parse_json(text));
    CHECK(g.t == 3);
    CHECK(g.arrows.size() == 6);
    // canonical reprint round-trips
    Json j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);

    // representation round trip with a form and conjugation entries
    Rep<GaussRat> r;
    r.graph = {2, {{"a", 1, 2}}, {{"f", 1, 2}}};
    r.dims = {1, 2};
    r.maps["a"] = Matrix<GaussRat>{{GaussRat(Rat(1), Rat(-2))}, {GaussRat(Rat(0))}};
    r.forms["f"] = Matrix<GaussRat>{{GaussRat(Rat(1))}, {GaussRat(Rat(2), Rat(1))}};
    r.validate();
    Json jr = rep_to_json(r);
    auto r2 = rep_from_json<GaussRat>(parse_json(jr.dump()));
    CHECK(r2 == r);

    // arrow referencing vertex 0 rejected
    CHECK_THROWS_AS(
        graph_from_json(parse_json(
            R"({"vertices": 2, "arrows": [{"id":"a","src":0,"dst":1}], "edges": []})")),
        Error);
    // malformed JSON reports line/column
    try {
        parse_json("{\n  \"vertices\": 2,\n  oops\n}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "parse-error");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("tits form: spec examples") {
    auto kron = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/kronecker.json")));
    TitsForm qk = tits_form(kron);
    CHECK(qk.eval({1, 1}) == 0);   // 1 + 1 - 2
    CHECK(qk.eval({1, 0}) == 1);
    CHECK(qk.eval({2, 1}) == 1);   // 4 + 1 - 4

    auto loop = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/loop.json")));
    CHECK(tits_form(loop).eval({5}) == 0);

    auto a2 = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/a2.json")));
    CHECK(tits_form(a2).eval({1, 1}) == 1);
}

TEST_CASE("gram evaluation agrees with the defining sum on random vectors") {
    test::Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        int n = (int)test::rand_int(rng, 1, 5);
        MixedGraph g;
        g.t = n;
        int m = (int)test::rand_int(rng, 0, 6);
        for (int k = 0; k < m; ++k)
            g.arrows.push_back({"a" + std::to_string(k), (int)test::rand_int(rng, 1, n),
                                (int)test::rand_int(rng, 1, n)});
        int ue = (int)test::rand_int(rng, 0, 2);
        for (int k = 0; k < ue; ++k) {
            int i = (int)test::rand_int(rng, 1, n), j = (int)test::rand_int(rng, 1, n);
            g.edges.push_back({"e" + std::to_string(k), std::min(i, j), std::max(i, j)});
        }
        std::vector<long long> z(n);
        for (auto& v : z) v = test::rand_int(rng, -4, 4);
        CHECK(tits_form(g).eval(z) == tits_eval_direct(g, z));
    }
}

TEST_CASE("classify: spec examples") {
    auto a2 = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/a2.json")));
    auto c1 = classify(a2);
    CHECK(c1.type == QType::Finite);
    CHECK(c1.diagram == "A2");

    auto kron = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/kronecker.json")));
    auto c2 = classify(kron);
    CHECK(c2.type == QType::Tame);
    CHECK(c2.diagram == "A~1");

    MixedGraph twoloops{1, {{"a", 1, 1}, {"b", 1, 1}}, {}};
    CHECK(classify(twoloops).type == QType::Wild);

    auto loop = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/loop.json")));
    auto c3 = classify(loop);
    CHECK(c3.type == QType::Tame);
    CHECK(c3.diagram == "A~0");
}

TEST_CASE("recognize_dynkin shapes") {
    auto path = [](int n) {
        MixedGraph g;
        g.t = n;
        for (int v = 1; v < n; ++v) g.arrows.push_back({"a" + std::to_string(v), v, v + 1});
        return g;
    };
    CHECK(recognize_dynkin(path(5)) == std::optional<std::string>("A5"));

    // star with legs (1,1,1) on 4 vertices = D4; with legs (1,1,2) = D5
    MixedGraph d4{4, {{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}}, {}};
    CHECK(recognize_dynkin(d4) == std::optional<std::string>("D4"));
    MixedGraph d5{5, {{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}, {"d", 3, 5}}, {}};
    CHECK(recognize_dynkin(d5) == std::optional<std::string>("D5"));

    MixedGraph cyc4{4, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 1}}, {}};
    CHECK(recognize_dynkin(cyc4) == std::optional<std::string>("A~3"));

    // E-series and their extensions
    MixedGraph e6{6, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 5}, {"e", 3, 6}}, {}};
    CHECK(recognize_dynkin(e6) == std::optional<std::string>("E6"));
    MixedGraph e6t{7,
                   {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 5}, {"e", 3, 6}, {"f", 6, 7}},
                   {}};
    CHECK(recognize_dynkin(e6t) == std::optional<std::string>("E~6"));
    MixedGraph dt5{6, {{"a", 1, 3}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 5}, {"e", 4, 6}}, {}};
    CHECK(recognize_dynkin(dt5) == std::optional<std::string>("D~5"));
}

TEST_CASE("orientation invariance of q and classify") {
    test::Rng rng(41);
    auto e6 = MixedGraph{6, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 5}, {"e", 3, 6}}, {}};
    for (int t = 0; t < 10; ++t) {
        MixedGraph g = e6;
        for (auto& a : g.arrows)
            if (test::rand_int(rng, 0, 1)) std::swap(a.src, a.dst);
        CHECK(classify(g).diagram == "E6");
        std::vector<long long> z(6);
        for (auto& v : z) v = test::rand_int(rng, 0, 3);
        CHECK(tits_form(g).eval(z) == tits_form(e6).eval(z));
    }
}

TEST_CASE("indecomposable dimensions: spec examples") {
    auto a2 = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/a2.json")));
    auto roots = indecomposable_dimensions(a2);
    std::vector<std::vector<long long>> expect{{0, 1}, {1, 0}, {1, 1}};
    CHECK(roots == expect);

    MixedGraph a3{3, {{"a", 1, 2}, {"b", 2, 3}}, {}};
    CHECK(indecomposable_dimensions(a3).size() == 6);

    auto kron = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/kronecker.json")));
    auto kr = indecomposable_dimensions(kron, 2);
    for (auto& z : kr) {
        long long q = tits_form(kron).eval(z);
        CHECK((q == 0 || q == 1));
    }
    bool has11 = false, has21 = false, has12 = false, has22 = false;
    for (auto& z : kr) {
        if (z == std::vector<long long>{1, 1}) has11 = true;
        if (z == std::vector<long long>{2, 1}) has21 = true;
        if (z == std::vector<long long>{1, 2}) has12 = true;
        if (z == std::vector<long long>{2, 2}) has22 = true;
    }
    CHECK(has11);
    CHECK(has21);
    CHECK(has12);
    CHECK(has22);

    MixedGraph twoloops{1, {{"a", 1, 1}, {"b", 1, 1}}, {}};
    CHECK_THROWS_AS(indecomposable_dimensions(twoloops, 3), Error);
}

TEST_CASE("A_t root count is t(t+1)/2; long paths stay fast") {
    for (int t = 1; t <= 5; ++t) {
        MixedGraph g;
        g.t = t;
        for (int v = 1; v < t; ++v) g.arrows.push_back({"a" + std::to_string(v), v, v + 1});
        CHECK((long long)indecomposable_dimensions(g).size() == (long long)t * (t + 1) / 2);
    }
    // pruning keeps A_12 instant despite the a-priori cap of 6 per entry
    MixedGraph g;
    g.t = 12;
    for (int v = 1; v < 12; ++v) g.arrows.push_back({"a" + std::to_string(v), v, v + 1});
    CHECK((long long)indecomposable_dimensions(g).size() == 78);
}

TEST_CASE("parameter count formula") {
    auto kron = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/kronecker.json")));
    CHECK(parameter_count(kron, {1, 1}) == 1);
    auto loop = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/loop.json")));
    CHECK(parameter_count(loop, {1}) == 1);
    auto a2 = graph_from_json(parse_json(slurp(std::string(QMX_FIXTURES) + "/a2.json")));
    CHECK(parameter_count(a2, {1, 1}) == 0);
}

TEST_CASE("census: serial and parallel agree, no mismatches on small sizes") {
    CensusResult s = census_serial(3, 4);
    CensusResult p = census_parallel(3, 4);
    CHECK(s == p);
    CHECK(s.mismatches == 0);
    CHECK(s.total > 100);
}
