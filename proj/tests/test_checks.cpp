#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/checks.hpp"
#include "theta/constraint.hpp"
#include "theta/errors.hpp"
#include "theta/io.hpp"

using namespace theta;

TEST_CASE("run_check: representative theorem rows pass") {
    CHECK(run_check("conj43", {{"S", 1}, {"R", 3}, {"k", 3}}, 300).status == CheckStatus::Pass);
    CHECK(run_check("tgen", {{"m", 5}, {"s", 1}}, 150).status == CheckStatus::Pass);
    CHECK(run_check("tgen", {{"m", 2}, {"s", 1}}, 150).status == CheckStatus::Pass);
    CHECK(run_check("staircase_id", {{"m", 4}, {"s", 3}}, 150).status == CheckStatus::Pass);
    CHECK(run_check("euler_pentagonal", {{"R", 5}}, 300).status == CheckStatus::Pass);
    CHECK(run_check("shanks_trunc", {{"k", 4}}, 150).status == CheckStatus::Pass);
    CHECK(run_check("kmr38", {{"a", 3}}, 200).status == CheckStatus::Pass);
    CHECK(run_check("wsf1", {}, 150).status == CheckStatus::Pass);
    CHECK(run_check("wsf2", {}, 150).status == CheckStatus::Pass);
    CHECK(run_check("cor_bq", {}, 200).status == CheckStatus::Pass);
    CHECK(run_check("ak_yk", {{"S", 2}, {"R", 5}, {"k", 4}}, 200).status == CheckStatus::Pass);
    CHECK(run_check("b3_thm", {{"k", 3}}, 200).status == CheckStatus::Pass);
    CHECK(run_check("m3_conj4", {{"k", 2}}, 200).status == CheckStatus::Pass);
}

TEST_CASE("conjecture tagging of conj43 depends on k") {
    CHECK(run_check("conj43", {{"S", 1}, {"R", 3}, {"k", 2}}, 60).tag == "theorem");
    CHECK(run_check("conj43", {{"S", 1}, {"R", 3}, {"k", 7}}, 60).tag == "conjecture");
}

TEST_CASE("b6 rows: identity, strictness, remark instance") {
    CheckReport r = run_check("b6_thm", {{"k", 1}}, 200);
    CHECK(r.status == CheckStatus::Pass);
    r = run_check("b6_strict_remark", {{"k", 1}}, 100);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.note.find("n=2") != std::string::npos);
}

TEST_CASE("ck thresholds: frozen values at N = 400") {
    const long long expected[] = {0, 0, 1, 9, 21, 9, 29};  // index k
    for (int k = 1; k <= 6; ++k) {
        CheckReport r = threshold_scan("ck_threshold", {{"k", k}}, 400);
        CHECK(r.status == CheckStatus::Threshold);
        CHECK(r.threshold_n0 == expected[k]);
    }
    // control: a window too short to clear the last negative of c_4 (at n=20)
    CheckReport r = threshold_scan("ck_threshold", {{"k", 4}}, 20);
    CHECK(r.status == CheckStatus::Fail);
    CHECK_THROWS_AS(threshold_scan("wsf1", {}, 100), UnknownCheck);
}

TEST_CASE("conj615_third: stated orientation fails, sign-corrected passes") {
    CheckReport printed = run_check("conj615_third", {{"S", 1}, {"R", 3}, {"k", 1}}, 100);
    CHECK(printed.status == CheckStatus::Fail);
    CHECK(printed.tag == "conjecture");
    REQUIRE(printed.witness.has_value());
    CHECK(printed.witness->index == 1);  // coefficient of q^1 is -1
    CheckReport fixed = run_check("conj615_third_neg", {{"S", 1}, {"R", 3}, {"k", 1}}, 100);
    CHECK(fixed.status == CheckStatus::Pass);
}

TEST_CASE("merca_u rows across the eight families") {
    for (long long f = 1; f <= 4; ++f)
        for (long long sg : {1LL, -1LL}) {
            CheckReport r =
                run_check("merca_u", {{"family", f}, {"sign", sg}, {"k", 1}, {"n_max", 30}}, 30);
            CHECK(r.status == CheckStatus::Pass);
        }
}

TEST_CASE("unknown names and bad parameters") {
    CHECK_THROWS_AS(run_check("no_such_row", {}, 10), UnknownCheck);
    CHECK_THROWS_AS(run_check("conj43", {{"S", 5}, {"R", 3}, {"k", 1}}, 10), ParameterDomain);
    CHECK_THROWS_AS(run_check("tgen", {{"m", 2}, {"s", 2}}, 10), ParameterDomain);
}

TEST_CASE("suite filters and registry listing") {
    CHECK(run_suite("none", 40).empty());
    const auto rows = check_rows();
    CHECK(rows.size() >= 28);
    bool saw_theorem = false, saw_conj = false;
    for (const auto& r : rows) {
        if (r.tag == "theorem") saw_theorem = true;
        if (r.tag == "conjecture") saw_conj = true;
    }
    CHECK(saw_theorem);
    CHECK(saw_conj);
}

TEST_CASE("report serialization") {
    CheckReport r = run_check("shanks_trunc", {{"k", 2}}, 40);
    nlohmann::json j = to_json(r);
    CHECK(j["name"] == "shanks_trunc");
    CHECK(j["status"] == "pass");
    CHECK(j["params"]["k"] == 2);
    const std::string line = report_csv_line(r);
    CHECK(line.find("shanks_trunc") == 0);
    CHECK(line.find("pass") != std::string::npos);
    CHECK(report_csv_header() == "name,params,range,status,witness_index");
}

TEST_CASE("reports are reproducible") {
    CheckReport a = run_check("a13_b3", {{"k", 2}}, 60);
    CheckReport b = run_check("a13_b3", {{"k", 2}}, 60);
    a.runtime_ms = b.runtime_ms = 0;
    CHECK(to_json(a) == to_json(b));
    CHECK(a.status == CheckStatus::Pass);
}

TEST_CASE("serialization round trips") {
    // series with coefficients beyond 64 bits survive the decimal encoding
    TruncatedSeries big(3);
    big[0] = 1;
    big[2] = parse_dec("123456789012345678901234567890");
    big[3] = parse_dec("-987654321098765432109876543210");
    CHECK(series_from_json(to_json(big)) == big);

    Partition p({9, 4, 4, 1});
    CHECK(partition_from_json(to_json(p)) == p);

    Constraint c = Constraint::pm_residue(2, 7);
    c.distinct = false;
    c.max_multiplicity[2] = 3;
    c.min_part = 1;
    c.required_parts = {2, 2};
    c.forbidden_divisor = 14;
    Constraint back = constraint_from_json(to_json(c));
    for (int n = 0; n <= 25; ++n) CHECK(count(n, c) == count(n, back));
}

TEST_CASE("partition statistics record") {
    auto st = Partition({5, 3, 2, 2, 1}).statistics();
    CHECK(st.length == 5);
    CHECK(st.even_length_count == 2);
    CHECK(st.odd_length_count == 3);
    CHECK(st.size == 13);
    auto e = Partition().statistics();
    CHECK(e.length == 0);
    CHECK(e.size == 0);
}
