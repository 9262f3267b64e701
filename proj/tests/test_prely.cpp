#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lywb/prely.hpp"
#include "oracle/naive_prely.hpp"

using namespace lywb;

namespace {

using fx::induced44;

PreLyAlgebra<Rational> random_prely(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> v(-1, 1);
    Tensor3<Rational> a(n);
    Tensor4<Rational> b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                a(i, j, k) = Rational(v(rng));
                for (int l = 0; l < n; ++l) b(i, j, k, l) = Rational(v(rng));
            }
    return {a, b};
}

// The algebra of 2×2 upper triangular matrices is associative.
PreLyAlgebra<Rational> upper_triangular() {
    // basis E11, E12, E22
    Tensor3<Rational> a(3);
    a(0, 0, 0) = Rational(1);
    a(0, 1, 1) = Rational(1);
    a(1, 2, 1) = Rational(1);
    a(2, 2, 2) = Rational(1);
    return {a, Tensor4<Rational>(3)};
}

}  // namespace

TEST_CASE("products") {
    auto A = induced44();
    CHECK(star(A, A.e(0), A.e(1)) == A.e(0));
    CHECK(star(A, A.e(1), A.e(1)) == A.e(1));
    auto Z = PreLyAlgebra<Rational>::zero(3);
    CHECK(all_zero(associator(Z, Z.e(0), Z.e(1), Z.e(2))));
    auto U = upper_triangular();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(all_zero(associator(U, U.e(i), U.e(j), U.e(k))));
}

TEST_CASE("brace_d") {
    auto A = induced44();
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(all_zero(brace_d(A, A.e(i), A.e(i), A.e(k))));
    auto Z = PreLyAlgebra<Rational>::zero(2);
    CHECK(all_zero(brace_d(Z, Z.e(0), Z.e(1), Z.e(1))));
    // ω({x,y,z}_D, w) = −ω(z, ⟦x,y,w⟧) with ω = e1*∧e2* determines {x,y,z}_D.
    auto g = fx::ex44();
    Mat<Rational> w = fx::mat({{0, 1}, {-1, 0}});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                Vec<Rational> rhs(2);
                for (int t = 0; t < 2; ++t) rhs(t) = -(g.e(z).dot(w * bracket3(g, g.e(x), g.e(y), g.e(t))));
                Vec<Rational> solved = solve<Rational>(w.transpose(), rhs);
                CHECK(brace_d(A, A.e(x), A.e(y), A.e(z)) == solved);
            }
}

TEST_CASE("check_prely") {
    CHECK(check_prely(PreLyAlgebra<Rational>::zero(3)).passed());
    CHECK(check_prely(induced44()).passed());
    CHECK(oracle::PreLy<Rational>{2, induced44()}.failures().empty());
    CHECK(check_prely_consequences(induced44()).passed());
}

TEST_CASE("property: check_prely agrees with the oracle on random tensors") {
    std::mt19937 rng(29);
    int failing = 0;
    for (int t = 0; t < 12; ++t) {
        auto A = random_prely(rng, 2);
        auto report = check_prely(A);
        auto fails = oracle::PreLy<Rational>{2, A}.failures();
        for (const char* id :
             {"pre.commutator-brace", "pre.brace-commutator", "pre.brace-brace", "pre.brace-D", "pre.D-star"})
            CHECK(report.mentions(id) == (fails.count(id) > 0));
        failing += !report.passed();
    }
    CHECK(failing > 0);
}

TEST_CASE("sub_adjacent") {
    auto Z = sub_adjacent(PreLyAlgebra<Rational>::zero(2));
    CHECK(Z.c.is_zero_tensor());
    CHECK(Z.d.is_zero_tensor());
    CHECK(sub_adjacent(induced44()) == fx::ex44());
    auto A = induced44();
    auto g = sub_adjacent(A);
    CHECK(check_ly(g).passed());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(bracket3(g, g.e(i), g.e(j), g.e(k)) ==
                      Vec<Rational>(brace_d(A, A.e(i), A.e(j), A.e(k)) + brace(A, A.e(i), A.e(j), A.e(k)) -
                                    brace(A, A.e(j), A.e(i), A.e(k))));
    auto bad = induced44();
    bad.b(0, 0, 0, 0) = Rational(1);
    CHECK_THROWS_AS(sub_adjacent(bad), Error);
}

TEST_CASE("lr_rep") {
    CHECK(lr_rep(PreLyAlgebra<Rational>::zero(2)) ==
          Representation<Rational>::zero(sub_adjacent(PreLyAlgebra<Rational>::zero(2)), 2));
    auto A = induced44();
    auto r = lr_rep(A);
    CHECK(check_rep(r).passed());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(d_op(r, A.e(i), A.e(j)) * A.e(k) == brace_d(A, A.e(i), A.e(j), A.e(k)));
    CHECK(check_rep(dual(r)).passed());
}

TEST_CASE("invariant forms") {
    auto Z = PreLyAlgebra<Rational>::zero(2);
    InvariantForm<Rational> I(Mat<Rational>::Identity(2, 2));
    CHECK(check_invariant(Z, I).passed());
    CHECK(b_sharp(I) == Mat<Rational>::Identity(2, 2));
    InvariantForm<Rational> D(fx::mat({{2, 0}, {0, 3}}));
    CHECK(b_sharp(D) == fx::mat({{2, 0}, {0, 3}}));
    CHECK(check_invariant(Z, D).passed());

    // First failure: B(e1*e1, e2) + B(e1, e1*e2) = 0 + 1.
    auto rep = check_invariant(induced44(), I);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.mentions("inv.star"));
    CHECK(rep.violations[0].residual == fx::vec({1}));
    CHECK(rep.violations[0].indices == std::vector<int>{1, 1, 2});

    CHECK_THROWS_AS(InvariantForm<Rational>(fx::mat({{1, 1}, {0, 1}})), Error);
    try {
        InvariantForm<Rational> bad(fx::mat({{1, 1}, {1, 1}}));
        FAIL("expected Degenerate");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
        CHECK(std::string(e.what()).find("(-1, 1)") != std::string::npos);
    }
}

TEST_CASE("property: b_sharp realizes the pairing") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> v(-5, 5);
    InvariantForm<Rational> F(fx::mat({{2, 1, 0}, {1, 3, 0}, {0, 0, -1}}));
    for (int t = 0; t < 30; ++t) {
        Vec<Rational> x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x(i) = Rational(v(rng));
            y(i) = Rational(v(rng));
        }
        CHECK((b_sharp(F) * x).dot(y) == x.dot(F.B * y));
    }
}
