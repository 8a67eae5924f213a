#include <doctest.h>

#include "lgdiv/modring.hpp"
#include "oracle.hpp"

using namespace lgdiv;

namespace {

ModMatrix make(const Modulus& m, size_t rows, size_t cols, std::vector<uint64_t> entries) {
    ModMatrix a(rows, cols, m);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a.set(i, j, entries[i * cols + j]);
    return a;
}

} // namespace

TEST_CASE("modulus construction and arithmetic") {
    CHECK_THROWS_AS(Modulus(4, 2), Error);
    CHECK_THROWS_AS(Modulus(1, 1), Error);
    CHECK_THROWS_AS(Modulus(5, 0), Error);
    CHECK_THROWS_AS(Modulus(5, 40), Error); // 5^40 overflows

    Modulus m(5, 3);
    CHECK(m.value() == 125);
    CHECK(m.pow_p(2) == 25);
    CHECK(m.add(100, 50) == 25);
    CHECK(m.sub(10, 20) == 115);
    CHECK(m.mul(25, 5) == 0);
    CHECK(m.pow(2, 7) == 3);
}

TEST_CASE("valuation") {
    Modulus m53(5, 3);
    CHECK(m53.val(0) == 3);
    CHECK(m53.val(50) == 2);
    Modulus m72(7, 2);
    CHECK(m72.val(3) == 0);

    // val(x y) = min(val x + val y, n) for all pairs mod 5^3
    for (uint64_t x = 0; x < 125; ++x)
        for (uint64_t y = 0; y < 125; ++y) {
            unsigned expected = std::min<unsigned>(m53.val(x) + m53.val(y), 3);
            REQUIRE(m53.val(m53.mul(x, y)) == expected);
        }
}

TEST_CASE("unit inverse") {
    Modulus m(5, 2);
    CHECK(m.inv_unit(1) == 1);
    CHECK(m.inv_unit(2) == 13);
    CHECK_THROWS_AS(m.inv_unit(5), Error);

    ResidueInt two(2, m);
    CHECK(inv(two).value() == 13);
    CHECK((two * inv(two)).value() == 1);
    for (uint64_t x = 1; x < 25; ++x) {
        if (x % 5 == 0) continue;
        ResidueInt r(x, m);
        CHECK(inv(inv(r)) == r);
        CHECK((r * inv(r)).value() == 1);
    }
}

TEST_CASE("residue modulus mismatch is an error") {
    Modulus a(5, 2), b(5, 3);
    ResidueInt x(3, a), y(3, b);
    CHECK_THROWS_AS((void)(x + y), Error);
    CHECK_THROWS_AS((void)(x * y), Error);
}

TEST_CASE("unit order") {
    Modulus m(5, 2);
    CHECK(m.unit_order(2) == 20);
    CHECK(m.unit_order(7) == 4);
    CHECK(m.unit_order(24) == 2);
    CHECK(m.unit_order(6) == 5);
    Modulus m1(5, 1);
    CHECK(m1.unit_order(2) == 4);
    CHECK(m1.unit_order(4) == 2);
}

TEST_CASE("howell form basics") {
    Modulus m(5, 2);
    ModMatrix id = ModMatrix::identity(2, m);
    HowellForm hf = howell_form(id);
    CHECK(hf.h == id);

    ModMatrix zero(2, 2, m);
    CHECK(howell_form(zero).h.rows() == 0);
}

TEST_CASE("howell row space matches brute-force enumeration") {
    Modulus m(5, 2);
    // the derived example: row space of [[5,0],[0,5]] has 25 elements
    ModMatrix a = make(m, 2, 2, {5, 0, 0, 5});
    HowellForm hf = howell_form(a);
    auto span = oracle::enumerate_span({{5, 0}, {0, 5}}, 2, m);
    CHECK(span.size() == 25);
    size_t members = 0;
    for (uint64_t x = 0; x < 25; ++x)
        for (uint64_t y = 0; y < 25; ++y) {
            std::vector<uint64_t> v{x, y};
            bool in = in_row_space(hf.h, v);
            CHECK(in == (span.count(v) > 0));
            members += in ? 1 : 0;
        }
    CHECK(members == 25);
}

TEST_CASE("howell transform and idempotence on random inputs") {
    Modulus m(5, 3);
    uint64_t state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33) % 125;
    };
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 3;
        ModMatrix a(rows, cols, m);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) a.set(i, j, rnd());
        HowellForm hf = howell_form(a);
        // u * a = h
        CHECK(hf.u.rows() == hf.h.rows());
        CHECK(hf.u.mul(a) == hf.h);
        // idempotence
        CHECK(howell_form(hf.h).h == hf.h);
        // row space preserved: every original row reduces to zero
        for (size_t i = 0; i < rows; ++i) CHECK(in_row_space(hf.h, a.row(i)));
        // every vector of the brute-force span is a member and vice versa
        std::vector<std::vector<uint64_t>> gens;
        for (size_t i = 0; i < rows; ++i)
            gens.emplace_back(a.row(i).begin(), a.row(i).end());
        auto span = oracle::enumerate_span(gens, cols, m);
        uint64_t count = 0;
        std::vector<uint64_t> v(cols, 0);
        // walk the whole module when it is small enough
        uint64_t total = 1;
        for (size_t j = 0; j < cols; ++j) total *= 125;
        if (total <= 125 * 125) {
            for (uint64_t code = 0; code < total; ++code) {
                uint64_t c = code;
                for (size_t j = 0; j < cols; ++j) {
                    v[j] = c % 125;
                    c /= 125;
                }
                bool in = in_row_space(hf.h, v);
                REQUIRE(in == (span.count(v) > 0));
                count += in ? 1 : 0;
            }
            CHECK(count == span.size());
        }
    }
}

TEST_CASE("solve_linear examples") {
    Modulus m(5, 2);
    SUBCASE("identity system") {
        ModMatrix a = ModMatrix::identity(2, m);
        std::vector<ResidueInt> b{ResidueInt(7, m), ResidueInt(21, m)};
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(sol->particular[0].value() == 7);
        CHECK(sol->particular[1].value() == 21);
        CHECK(sol->kernel.empty());
    }
    SUBCASE("5x = 10 mod 25") {
        ModMatrix a = make(m, 1, 1, {5});
        auto sol = solve_linear(a, {ResidueInt(10, m)});
        REQUIRE(sol.has_value());
        // any particular solution works; the solution set is 2 + 5Z
        CHECK(sol->particular[0].value() % 5 == 2);
        REQUIRE(sol->kernel.size() == 1);
        CHECK(sol->kernel[0][0].value() == 5);
    }
    SUBCASE("5x = 1 mod 25 has no solution") {
        ModMatrix a = make(m, 1, 1, {5});
        CHECK(!solve_linear(a, {ResidueInt(1, m)}).has_value());
    }
    SUBCASE("dimension mismatch") {
        ModMatrix a = ModMatrix::identity(2, m);
        CHECK_THROWS_AS(solve_linear(a, {ResidueInt(1, m)}), Error);
    }
}

TEST_CASE("solve_linear agrees with exhaustive search") {
    Modulus m(5, 2);
    uint64_t state = 99;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33) % 25;
    };
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = 1 + trial % 3;
        ModMatrix a(rows, 2, m);
        for (size_t i = 0; i < rows; ++i) {
            a.set(i, 0, rnd());
            a.set(i, 1, rnd());
        }
        std::vector<ResidueInt> b;
        for (size_t i = 0; i < rows; ++i) b.emplace_back(rnd(), m);

        std::set<std::pair<uint64_t, uint64_t>> brute;
        for (uint64_t x = 0; x < 25; ++x)
            for (uint64_t y = 0; y < 25; ++y) {
                bool ok = true;
                for (size_t i = 0; i < rows && ok; ++i) {
                    uint64_t lhs = m.add(m.mul(a.at(i, 0), x), m.mul(a.at(i, 1), y));
                    ok = lhs == b[i].value();
                }
                if (ok) brute.insert({x, y});
            }

        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value() == !brute.empty());
        if (!sol) continue;
        // particular solves the system
        CHECK(brute.count({sol->particular[0].value(), sol->particular[1].value()}) == 1);
        // particular + kernel span = the brute-force solution set
        std::vector<std::vector<uint64_t>> kgens;
        for (const auto& kv : sol->kernel) kgens.push_back({kv[0].value(), kv[1].value()});
        auto kset = oracle::enumerate_span(kgens, 2, m);
        CHECK(kset.size() == brute.size());
        for (const auto& k : kset) {
            uint64_t x = m.add(sol->particular[0].value(), k[0]);
            uint64_t y = m.add(sol->particular[1].value(), k[1]);
            REQUIRE(brute.count({x, y}) == 1);
        }
    }
}

TEST_CASE("abelian structure examples") {
    Modulus m(5, 2);
    CHECK(abelian_structure({}, 2, m).empty());
    CHECK(abelian_structure({{5, 0}}, 2, m) == std::vector<uint64_t>{5});
    CHECK(abelian_structure({{1, 0}, {0, 1}}, 2, m, {{5, 0}, {0, 5}}) ==
          std::vector<uint64_t>{5, 5});
    CHECK_THROWS_AS(abelian_structure({{5, 0}}, 2, m, {{1, 0}}), Error);
}

TEST_CASE("abelian structure matches the counting oracle") {
    for (auto [p, n] : {std::pair<uint64_t, unsigned>{5, 2}, {3, 3}, {7, 2}}) {
        Modulus m(p, n);
        uint64_t state = 2024 + p;
        auto rnd = [&]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return (state >> 33) % m.value();
        };
        for (int trial = 0; trial < 25; ++trial) {
            size_t dim = 1 + trial % 2; // keep oracle spans below 10^4 elements
            std::vector<std::vector<uint64_t>> gens;
            for (int g = 0; g < 2; ++g) {
                std::vector<uint64_t> v(dim);
                for (auto& x : v) x = rnd();
                gens.push_back(std::move(v));
            }
            auto aset = oracle::enumerate_span(gens, dim, m);
            CHECK(abelian_structure(gens, dim, m) ==
                  oracle::structure_by_counting(aset, dim, m));

            // quotient by p * (the same generators)
            std::vector<std::vector<uint64_t>> sub;
            for (const auto& g : gens) {
                std::vector<uint64_t> v(dim);
                for (size_t k = 0; k < dim; ++k) v[k] = m.mul(g[k], p);
                sub.push_back(std::move(v));
            }
            auto bset = oracle::enumerate_span(sub, dim, m);
            CHECK(abelian_structure(gens, dim, m, sub) ==
                  oracle::structure_by_counting(aset, bset, dim, m));
        }
    }
}

TEST_CASE("quotient structure representatives have the stated orders") {
    Modulus m(5, 3);
    auto q = quotient_structure({{1, 0}, {0, 1}}, 2, m, {{25, 0}, {0, 5}});
    CHECK(q.orders == std::vector<uint64_t>{5, 25});
    REQUIRE(q.representatives.size() == 2);
    HowellAccumulator sub(2, m);
    sub.insert(std::vector<uint64_t>{25, 0});
    sub.insert(std::vector<uint64_t>{0, 5});
    for (size_t t = 0; t < q.orders.size(); ++t) {
        // order e means e*rep lands in the subgroup and no smaller power does
        std::vector<uint64_t> v = q.representatives[t];
        for (auto& x : v) x = m.mul(x, q.orders[t]);
        CHECK(sub.contains(v));
        std::vector<uint64_t> w = q.representatives[t];
        for (auto& x : w) x = m.mul(x, q.orders[t] / 5);
        CHECK(!sub.contains(w));
    }
}

TEST_CASE("kernel generators") {
    Modulus m(5, 2);
    // kernel of multiplication by 5 on (Z/25)^1 is 5Z/25
    auto k = kernel_generators({{5}}, 1, m);
    auto kspan = oracle::enumerate_span(k, 1, m);
    CHECK(kspan.size() == 5);
    // kernel of a 2x2 with unit determinant is trivial
    auto k2 = kernel_generators({{1, 1}, {0, 1}}, 2, m);
    CHECK(oracle::enumerate_span(k2, 2, m).size() == 1);
}
