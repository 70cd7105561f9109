#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/constraint.hpp"
#include "theta/qseries.hpp"
#include "theta/special_counts.hpp"

using namespace theta;

TEST_CASE("partition basics and statistics") {
    Partition p({5, 3, 2, 2, 1});
    CHECK(p.length() == 5);
    CHECK(p.size() == 13);
    CHECK(p.even_length_count() == 2);  // parts {2,2}
    CHECK(p.odd_length_count() == 3);   // parts {5,3,1}
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.part(1) == 5);
    CHECK(p.part(6) == 0);

    Partition empty;
    CHECK(empty.length() == 0);
    CHECK(empty.size() == 0);
    CHECK(empty.even_length_count() == 0);

    CHECK_THROWS_AS(Partition({3, 0}), DomainViolation);
}

TEST_CASE("mex and mex_mod") {
    CHECK(Partition({7, 7, 5, 3, 2, 2, 1}).mex() == 4);
    CHECK(Partition().mex() == 1);
    CHECK(Partition({1, 1}).mex() == 2);

    CHECK(Partition({3}).mex_mod(4, 3) == 7);
    CHECK(Partition().mex_mod(4, 1) == 1);
    CHECK(Partition({9, 5, 1}).mex_mod(4, 1) == 13);
}

TEST_CASE("union / diff") {
    CHECK(multiset_union(Partition({3, 1}), Partition({2})) == Partition({3, 2, 1}));
    CHECK(multiset_diff(Partition({3, 2, 1}), Partition({2})) == Partition({3, 1}));
    CHECK_THROWS_AS(multiset_diff(Partition({3}), Partition({2})), NotSubMultiset);
    // mutually inverse where defined
    Partition a({7, 4, 4, 1}), b({4, 1});
    CHECK(multiset_union(multiset_diff(a, b), b) == a);
}

TEST_CASE("staircase") {
    Partition d = Partition::staircase(3, 5, 4);
    CHECK(d == Partition({18, 13, 8, 3}));
    CHECK(d.size() == 42);
    CHECK(Partition::staircase(2, 7, 0).empty());
    CHECK(Partition::staircase(1, 3, 2) == Partition({4, 1}));
    for (int R = 2; R <= 10; ++R)
        for (int S = 1; S < R; ++S)
            for (int j = 0; j <= 20; ++j)
                CHECK(Partition::staircase(S, R, j).size() ==
                      static_cast<long long>(j) * (j - 1) * R / 2 + static_cast<long long>(j) * S);
}

TEST_CASE("slice and modular rows") {
    Partition p({10, 9, 8, 7, 3, 2});
    CHECK(p.slice(0, 3) == Partition({9, 3}));
    CHECK(p.slice_pm(1, 3) == Partition({10, 8, 7, 2}));
    CHECK(Partition().slice(1, 4).empty());

    Partition q({10, 9, 8, 8, 7, 3, 2});
    CHECK(q.modular_rows(3) == std::vector<int>{4, 3, 3, 3, 3, 1, 1});
    CHECK(Partition({3}).modular_rows(3) == std::vector<int>{1});
    CHECK(Partition().modular_rows(3).empty());
}

TEST_CASE("durfee height") {
    CHECK(Partition().durfee_height(0) == 0);
    // one huge part 3(k+2)+1 with k = 0: row 1 has k+3 boxes
    CHECK(Partition({7}).durfee_height(0) == 1);
    CHECK(Partition({4}).durfee_height(0) == 0);
}

TEST_CASE("enumeration completeness and order") {
    // descending lexicographic, largest part first
    auto parts5 = enumerate(5, Constraint::distinct_parts());
    REQUIRE(parts5.size() == 3);
    CHECK(parts5[0] == Partition({5}));
    CHECK(parts5[1] == Partition({4, 1}));
    CHECK(parts5[2] == Partition({3, 2}));

    auto all4 = enumerate(4, Constraint::unrestricted());
    REQUIRE(all4.size() == 5);
    CHECK(all4[0] == Partition({4}));
    CHECK(all4[1] == Partition({3, 1}));
    CHECK(all4[2] == Partition({2, 2}));
    CHECK(all4[3] == Partition({2, 1, 1}));
    CHECK(all4[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate(0, Constraint::distinct_parts()).size() == 1);
    CHECK(enumerate(0, Constraint::unrestricted())[0].empty());

    // duplicate-free and complete vs the series oracle, n <= 40
    TruncatedSeries pn = inverse(pochhammer(1, 1, 40));
    for (int n = 0; n <= 40; ++n) {
        auto v = enumerate(n, Constraint::unrestricted());
        CHECK(Int(v.size()) == pn[n]);
        for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].parts() > v[i].parts());
    }
}

TEST_CASE("count examples") {
    CHECK(count(5, Constraint::regular(3)) == 5);
    CHECK(count(4, Constraint::regular(3)) == 4);
    Constraint d5 = Constraint::distinct_parts();
    d5.forbidden_divisor = 5;
    CHECK(count(6, d5) == 3);
    CHECK(count(0, Constraint::unrestricted()) == 1);
}

TEST_CASE("cross-oracle: constrained counts equal Pochhammer-series coefficients") {
    const int N = 60;
    for (int R = 2; R <= 8; ++R) {
        for (int S = 1; 2 * S <= R; ++S) {
            TruncatedSeries gf = (2 * S == R)
                                     ? inverse(pochhammer(S, R, N))
                                     : inverse(pochhammer_product({{S, R}, {R - S, R}}, N));
            auto counts = count_range(Constraint::pm_residue(S, R), N);
            for (int n = 0; n <= N; ++n) CHECK(gf[n] == Int(counts[n]));
        }
    }
}

TEST_CASE("Euler: distinct = odd (n <= 60)") {
    auto d = count_range(Constraint::distinct_parts(), 60);
    auto o = count_range(Constraint::odd_parts(), 60);
    CHECK(d == o);
}

TEST_CASE("odd-part count has the parity of the size") {
    for (int n = 0; n <= 18; ++n)
        for (const Partition& p : enumerate(n, Constraint::unrestricted()))
            CHECK(p.odd_length_count() % 2 == n % 2);
}

TEST_CASE("constraint clauses: caps, bounds, required parts") {
    Constraint c;
    c.max_multiplicity[1] = 2;
    CHECK(count(3, c) == 2);  // (3), (2,1); not (1,1,1)

    Constraint req;
    req.required_parts = {2, 1};
    auto v = enumerate(5, req);
    for (const Partition& p : v) {
        CHECK(p.multiplicity(2) >= 1);
        CHECK(p.multiplicity(1) >= 1);
    }
    CHECK(v.size() == 2);  // (2,2,1), (2,1,1,1)

    Constraint bounds;
    bounds.min_part = 2;
    bounds.max_part = 3;
    CHECK(count(7, bounds) == 1);  // (3,2,2)

    // serial/parallel count kernels agree
    Constraint reg = Constraint::regular(3);
    CHECK(kernels::count_range_serial(reg, 45) == kernels::count_range_parallel(reg, 45));
}

TEST_CASE("matches() agrees with enumeration membership") {
    Constraint c = Constraint::pm_residue(1, 3);
    c.max_multiplicity[1] = 2;
    for (int n = 0; n <= 20; ++n) {
        auto in_family = enumerate(n, c);
        for (const Partition& p : in_family) CHECK(c.matches(p));
        CHECK(static_cast<unsigned long long>(in_family.size()) == count(n, c));
    }
    CHECK_FALSE(c.matches(Partition({3})));
    CHECK_FALSE(c.matches(Partition({1, 1, 1})));
    CHECK(c.matches(Partition({4, 2, 1})));
}
