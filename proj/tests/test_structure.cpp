#include <doctest.h>

#include "lgdiv/structure.hpp"

using namespace lgdiv;

TEST_CASE("preconditions on a small lower-triangular group") {
    Modulus m(5, 2);
    GroupPtr g = close_group(m, {Mat2::diagonal(m, 1, 2), Mat2(m, 1, 0, 5, 1)});
    PreconditionReport rep = check_preconditions(*g);
    CHECK(rep.g1_cyclic);
    CHECK(rep.basis_ok);
    CHECK(rep.ord_lambda1 == 4);
    CHECK(rep.g2_triangularity == Triangularity::lower);
    CHECK(rep.satisfied);
    REQUIRE(rep.g1_generator.has_value());
    CHECK(rep.g1_generator->e[3] == 2);
}

TEST_CASE("preconditions fail for the full matrix group") {
    // standard generators of GL2(Z/5), lifted entrywise mod 25
    Modulus m(5, 2);
    GroupPtr g = close_group(m, {Mat2(m, 2, 0, 0, 1), Mat2(m, 4, 1, 4, 0)});
    PreconditionReport rep = check_preconditions(*g);
    CHECK(!rep.g1_cyclic);
    CHECK(!rep.satisfied);
    CHECK(!rep.notes.empty());
}

TEST_CASE("preconditions fail when the order of the action is too small") {
    Modulus m(5, 2);
    // lambda1 = 4 has order 2
    GroupPtr g = close_group(m, {Mat2::diagonal(m, 1, 4), Mat2(m, 1, 0, 5, 1)});
    PreconditionReport rep = check_preconditions(*g);
    CHECK(rep.g1_cyclic);
    CHECK(rep.ord_lambda1 == 2);
    CHECK(!rep.satisfied);
}

TEST_CASE("parameter extraction on explicit family shapes") {
    SUBCASE("n3 j=m shape: (i, j, m, h) = (3, 2, 2, 1)") {
        Modulus m(5, 3);
        GroupPtr g = close_group(
            m, {Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 25, 1), Mat2::diagonal(m, 1, 2)});
        ParameterProfile prof = extract_parameters(*g);
        CHECK(prof.i == 3);
        CHECK(prof.j == 2);
        CHECK(prof.m == 2);
        CHECK(prof.h == 1);
        CHECK(prof.su_trivial);
        CHECK(!prof.sl_trivial);
        CHECK(prof.delta.e[0] == 26);
        CHECK(prof.tau_l == Mat2(m, 1, 0, 25, 1));
        CHECK(!vanishing_criterion(prof));
    }
    SUBCASE("j<m shape at n=3: (i, j, m, h) = (3, 1, 2, 1)") {
        Modulus m(5, 3);
        GroupPtr g = close_group(
            m, {Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 5, 1), Mat2::diagonal(m, 1, 2)});
        ParameterProfile prof = extract_parameters(*g);
        CHECK(prof.i == 3);
        CHECK(prof.j == 1);
        CHECK(prof.m == 2);
        CHECK(prof.h == 1);
        CHECK(!vanishing_criterion(prof));
    }
    SUBCASE("scalar diagonal group: i = j = n, m = h = 1") {
        Modulus m(5, 2);
        GroupPtr g = close_group(m, {Mat2::diagonal(m, 6, 6)});
        ParameterProfile prof = extract_parameters(*g);
        CHECK(prof.i == 2);
        CHECK(prof.j == 2);
        CHECK(prof.m == 1);
        CHECK(prof.h == 1);
        CHECK(prof.d == 1);
        CHECK(prof.su_trivial);
        CHECK(prof.sl_trivial);
        CHECK(vanishing_criterion(prof));
    }
}

TEST_CASE("delta construction lands on 1 + p^m exactly") {
    Modulus m(5, 3);
    // diagonal deviation 1 + 2*5 needs a genuine exponent l
    GroupPtr g = close_group(
        m, {Mat2::diagonal(m, 11, 2), Mat2(m, 1, 0, 5, 1), Mat2::diagonal(m, 1, 2)});
    ParameterProfile prof = extract_parameters(*g);
    CHECK(prof.m == 1);
    CHECK(prof.delta.e[0] == 6);
    CHECK(prof.delta.e[1] == 0);
    CHECK(prof.delta.e[2] == 0);
    CHECK(g->contains(prof.delta));
    if (prof.h < 3) CHECK(m.val(m.sub(prof.delta.e[3], 1)) == prof.h);
}

TEST_CASE("extraction errors") {
    Modulus m(5, 2);
    SUBCASE("precondition violated") {
        GroupPtr g = close_group(m, {Mat2(m, 2, 0, 0, 1), Mat2(m, 4, 1, 4, 0)});
        CHECK_THROWS_AS(extract_parameters(*g), Error);
    }
    SUBCASE("no diagonal deviation") {
        GroupPtr g = close_group(m, {Mat2(m, 1, 0, 5, 1), Mat2::diagonal(m, 1, 2)});
        try {
            extract_parameters(*g);
            FAIL("expected no_diagonal_deviation");
        } catch (const Error& e) {
            CHECK(e.code() == errc::no_diagonal_deviation);
        }
    }
}

TEST_CASE("vanishing criterion arithmetic") {
    Modulus m(5, 2);
    ParameterProfile prof{m};
    prof.i = 1;
    prof.j = 1;
    prof.m = 1;
    prof.h = 1;
    CHECK(vanishing_criterion(prof));
    prof.i = 3;
    prof.j = 1;
    prof.m = 2;
    prof.h = 1;
    CHECK(!vanishing_criterion(prof));
    prof.i = 2;
    prof.j = 2;
    prof.m = 1;
    prof.h = 1;
    CHECK(vanishing_criterion(prof));
}

TEST_CASE("conjugation") {
    Modulus m(5, 2);
    GroupPtr g = close_group(m, {Mat2::diagonal(m, 1, 2), Mat2(m, 1, 5, 0, 1)});
    CHECK(triangularity(*g) == Triangularity::upper);

    SUBCASE("by the identity") {
        GroupPtr c = conjugate(*g, Mat2::identity(m));
        REQUIRE(c->order() == g->order());
        for (size_t i = 0; i < g->order(); ++i) CHECK(c->contains(g->element(i)));
    }
    SUBCASE("swapping the basis turns upper into lower") {
        GroupPtr c = conjugate(*g, Mat2(m, 0, 1, 1, 0));
        CHECK(triangularity(*c) == Triangularity::lower);
    }
    SUBCASE("non-invertible conjugator") {
        CHECK_THROWS_AS(conjugate(*g, Mat2(m, 5, 0, 0, 1)), Error);
    }
}

TEST_CASE("extraction is covariant for diagonal conjugation") {
    Modulus m(5, 3);
    GroupPtr g = close_group(
        m, {Mat2::diagonal(m, 26, 6), Mat2(m, 1, 0, 25, 1), Mat2::diagonal(m, 1, 2)});
    ParameterProfile base = extract_parameters(*g);
    GroupPtr c = conjugate(*g, Mat2::diagonal(m, 3, 7));
    ParameterProfile prof = extract_parameters(*c);
    CHECK(prof.i == base.i);
    CHECK(prof.j == base.j);
    CHECK(prof.m == base.m);
    CHECK(prof.h == base.h);
}
