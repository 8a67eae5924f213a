#include <doctest.h>

#include <algorithm>
#include <set>

#include "lgdiv/matgroup.hpp"
#include "oracle.hpp"

using namespace lgdiv;

TEST_CASE("mat2 arithmetic") {
    Modulus m(5, 2);
    Mat2 a(m, 1, 2, 3, 4);
    Mat2 b(m, 0, 1, 1, 0);
    CHECK(a * b == Mat2(m, 2, 1, 4, 3));
    CHECK(a.det() == 23); // 4 - 6 mod 25
    CHECK(a.invertible());
}

TEST_CASE("mat2 inverse and pow") {
    Modulus m(5, 2);
    Mat2 a(m, 1, 2, 3, 4);
    Mat2 ai = a.inverse();
    CHECK(a * ai == Mat2::identity(m));
    CHECK(ai * a == Mat2::identity(m));
    CHECK(a.pow(0) == Mat2::identity(m));
    CHECK(a.pow(3) == a * a * a);

    Mat2 sing(m, 5, 0, 0, 1);
    CHECK_THROWS_AS(sing.inverse(), Error);
}

TEST_CASE("close_group basics") {
    Modulus m(5, 2);
    SUBCASE("identity generator") {
        CHECK(close_group(m, {Mat2::identity(m)})->order() == 1);
    }
    SUBCASE("empty generator list") { CHECK(close_group(m, {})->order() == 1); }
    SUBCASE("tau_l is cyclic of order 5") {
        GroupPtr g = close_group(m, {Mat2(m, 1, 0, 5, 1)});
        CHECK(g->order() == 5);
        for (size_t i = 0; i < g->order(); ++i) CHECK(g->element_entries(i)[2] % 5 == 0);
    }
    SUBCASE("cap exceeded") {
        CHECK_THROWS_AS(close_group(m, {Mat2(m, 1, 0, 5, 1)}, 3), Error);
    }
    SUBCASE("non-invertible generator") {
        CHECK_THROWS_AS(close_group(m, {Mat2(m, 5, 0, 0, 1)}), Error);
    }
}

TEST_CASE("closure matches the pairwise-product oracle") {
    Modulus m(5, 3);
    uint64_t lam = m.pow(2, 25); // order p - 1 = 4
    REQUIRE(m.unit_order(lam) == 4);
    std::vector<Mat2> gens{Mat2::diagonal(m, 6, 6), Mat2(m, 1, 0, 25, 1),
                           Mat2::diagonal(m, 1, lam)};
    GroupPtr g = close_group(m, gens);
    auto brute = oracle::naive_closure(gens, m);
    CHECK(g->order() == brute.size());
    CHECK(g->order() == 500);
    for (size_t i = 0; i < g->order(); ++i) CHECK(brute.count(g->element_entries(i)) == 1);
}

TEST_CASE("group invariants") {
    Modulus m(5, 2);
    std::vector<Mat2> gens{Mat2::diagonal(m, 1, 2), Mat2(m, 1, 0, 5, 1)};
    GroupPtr g = close_group(m, gens);
    CHECK(g->order() == 100);

    SUBCASE("inverses stay inside") {
        for (size_t i = 0; i < g->order(); ++i) {
            size_t inv = g->inverse_index(i);
            CHECK(g->product_index(i, inv) == 0);
        }
    }
    SUBCASE("word evaluation reproduces the element") {
        for (size_t i = 0; i < g->order(); ++i) {
            Mat2 acc = Mat2::identity(m);
            for (uint32_t w : g->word(i)) acc = acc * gens[w];
            CHECK(acc == g->element(i));
        }
    }
    SUBCASE("element set independent of generator order") {
        GroupPtr h = close_group(m, {gens[1], gens[0]});
        REQUIRE(h->order() == g->order());
        for (size_t i = 0; i < g->order(); ++i) CHECK(h->contains(g->element(i)));
    }
    SUBCASE("bfs word lengths are non-decreasing along discovery order") {
        size_t prev = 0;
        for (size_t i = 0; i < g->order(); ++i) {
            size_t len = g->word(i).size();
            CHECK(len >= prev);
            prev = len;
        }
    }
}

TEST_CASE("reduce_mod") {
    Modulus m(5, 3);
    uint64_t lam = m.pow(2, 25);
    std::vector<Mat2> gens{Mat2::diagonal(m, 6, 6), Mat2(m, 1, 0, 25, 1),
                           Mat2::diagonal(m, 1, lam)};
    GroupPtr g = close_group(m, gens);

    SUBCASE("level n is the group itself") {
        GroupPtr r = reduce_mod(*g, 3);
        REQUIRE(r->order() == g->order());
        for (size_t i = 0; i < g->order(); ++i) CHECK(r->contains(g->element(i)));
    }
    SUBCASE("mod p^2 this group is diagonal") {
        CHECK(triangularity(*reduce_mod(*g, 2)) == Triangularity::diagonal);
    }
    SUBCASE("tower property") {
        GroupPtr r1a = reduce_mod(*reduce_mod(*g, 2), 1);
        GroupPtr r1b = reduce_mod(*g, 1);
        REQUIRE(r1a->order() == r1b->order());
        for (size_t i = 0; i < r1a->order(); ++i) CHECK(r1b->contains(r1a->element(i)));
    }
}

TEST_CASE("reduce_mod of the j<m family shape at level 1 is cyclic diagonal") {
    Modulus m(5, 3);
    std::vector<Mat2> gens{Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 5, 1),
                           Mat2::diagonal(m, 1, 2)};
    GroupPtr g1 = reduce_mod(*close_group(m, gens), 1);
    CHECK(triangularity(*g1) == Triangularity::diagonal);
    CHECK(g1->order() == 4); // generated by diag(1, 2 mod 5)
    uint64_t maxord = 0;
    for (size_t i = 0; i < g1->order(); ++i) maxord = std::max(maxord, g1->element_order(i));
    CHECK(maxord == g1->order());
}

TEST_CASE("triangularity") {
    Modulus m(5, 2);
    CHECK(triangularity(*close_group(m, {Mat2::identity(m)})) == Triangularity::diagonal);
    CHECK(triangularity(*close_group(m, {Mat2(m, 1, 0, 5, 1)})) == Triangularity::lower);
    CHECK(triangularity(*close_group(m, {Mat2(m, 1, 5, 0, 1)})) == Triangularity::upper);
    CHECK(triangularity(*close_group(m, {Mat2(m, 1, 5, 0, 1), Mat2(m, 1, 0, 5, 1)})) ==
          Triangularity::none);
}

TEST_CASE("fixed points") {
    Modulus m(5, 3);
    SUBCASE("identity group fixes everything") {
        CHECK(fixed_points(*close_group(m, {Mat2::identity(m)})).max_exact_order == 125);
    }
    SUBCASE("j<m family shape fixes only E[p], checked exhaustively") {
        std::vector<Mat2> gens{Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 5, 1),
                               Mat2::diagonal(m, 1, 2)};
        GroupPtr g = close_group(m, gens);
        FixedSubmodule fx = fixed_points(*g);
        CHECK(fx.max_exact_order <= 5);
        uint64_t count = 0, maxord = 1;
        for (uint64_t x = 0; x < 125; ++x)
            for (uint64_t y = 0; y < 125; ++y) {
                bool fixed = true;
                for (const Mat2& gen : g->generators()) {
                    auto img = gen.apply({x, y});
                    if (img[0] != x || img[1] != y) {
                        fixed = false;
                        break;
                    }
                }
                if (fixed) {
                    ++count;
                    maxord = std::max(maxord, TorsionPoint(m, x, y).exact_order());
                }
            }
        std::vector<std::vector<uint64_t>> fgens;
        for (const auto& pt : fx.generators) fgens.push_back({pt.x, pt.y});
        CHECK(oracle::enumerate_span(fgens, 2, m).size() == count);
        CHECK(fx.max_exact_order == maxord);
    }
    SUBCASE("n3 j=m family shape fixes within E[p^2]") {
        std::vector<Mat2> gens{Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 25, 1),
                               Mat2::diagonal(m, 1, 2)};
        CHECK(fixed_points(*close_group(m, gens)).max_exact_order <= 25);
    }
}

TEST_CASE("cyclic subgroups") {
    Modulus m(5, 2);
    SUBCASE("identity group") {
        auto subs = cyclic_subgroups(*close_group(m, {Mat2::identity(m)}));
        REQUIRE(subs.size() == 1);
        CHECK(subs[0].order == 1);
    }
    SUBCASE("cyclic of prime order") {
        CHECK(cyclic_subgroups(*close_group(m, {Mat2(m, 1, 0, 5, 1)})).size() == 2);
    }
    SUBCASE("cyclic of order 20 has one subgroup per divisor") {
        auto subs = cyclic_subgroups(*close_group(m, {Mat2::diagonal(m, 1, 2)}));
        std::multiset<uint64_t> orders;
        for (const auto& s : subs) orders.insert(s.order);
        CHECK(orders == std::multiset<uint64_t>{1, 2, 4, 5, 10, 20});
    }
}

TEST_CASE("torsion point exact order") {
    Modulus m(5, 3);
    CHECK(TorsionPoint(m, 0, 0).exact_order() == 1);
    CHECK(TorsionPoint(m, 25, 0).exact_order() == 5);
    CHECK(TorsionPoint(m, 25, 5).exact_order() == 25);
    CHECK(TorsionPoint(m, 1, 100).exact_order() == 125);
}
