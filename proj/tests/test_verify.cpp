#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tribo/report.hpp"
#include "tribo/verify.hpp"

using namespace tribo;

TEST_CASE("catalog is stable, named, and duplicate-free") {
    const auto& cat = check_catalog();
    CHECK(cat.size() == 31);
    std::set<std::string> ids;
    for (const auto& info : cat) {
        CHECK(!info.id.empty());
        CHECK(!info.description.empty());
        CHECK(ids.insert(info.id).second);
    }
    for (const char* must : {"rank_eq", "closed_forms", "compose", "zt_roundtrip",
                             "abc_uniqueness", "equivalence", "census"})
        CHECK(ids.count(must) == 1);
}

TEST_CASE("full run at a small limit passes everything") {
    const auto reports = run_checks({}, 300);
    const auto& cat = check_catalog();
    REQUIRE(reports.size() == cat.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].id);
        CHECK(reports[i].id == cat[i].id); // catalog order, always
        CHECK(reports[i].checked > 0);
        CHECK(reports[i].violation_count == 0);
        CHECK(reports[i].violations.empty());
        CHECK(reports[i].passed());
        CHECK(reports[i].to >= reports[i].from);
    }
}

TEST_CASE("selection picks exactly the named checks, in catalog order") {
    const auto reports = run_checks({"zt_roundtrip", "gap_identity"}, 2000);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == "gap_identity"); // catalog order, not selection order
    CHECK(reports[1].id == "zt_roundtrip");
    CHECK(reports[0].passed());
    CHECK(reports[1].passed());
    CHECK(reports[1].checked >= 2 * 2000); // value and length per N
}

TEST_CASE("duplicate selection entries collapse") {
    const auto reports = run_checks({"legacy", "legacy", "legacy"}, 500);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == "legacy");
}

TEST_CASE("unknown ids and zero limits are rejected") {
    CHECK_THROWS_AS((void)run_checks({"no_such_check"}, 100), domain_error);
    CHECK_THROWS_AS((void)run_checks({"rank_eq", "bogus"}, 100), domain_error);
    CHECK_THROWS_AS((void)run_checks({}, 0), domain_error);
}

TEST_CASE("worker count does not change results") {
    const std::vector<std::string> sel{"rank_eq", "delta", "zt_order", "structural"};
    const auto one = run_checks(sel, 1500, 1);
    const auto four = run_checks(sel, 1500, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].id == four[i].id);
        CHECK(one[i].checked == four[i].checked);
        CHECK(one[i].violation_count == four[i].violation_count);
        CHECK(one[i].from == four[i].from);
        CHECK(one[i].to == four[i].to);
    }
}

TEST_CASE("text rendering carries the verdict") {
    check_report r;
    r.id = "demo";
    r.from = 0;
    r.to = 9;
    r.checked = 10;
    r.elapsed_s = 0.5;
    CHECK(render_line(r).find("demo range=[0..9] checked=10 violations=0 PASS") == 0);
    r.violation_count = 3;
    CHECK(render_line(r).find(" FAIL ") != std::string::npos);
}

TEST_CASE("violation rendering caps and counts the overflow") {
    check_report r;
    r.id = "demo";
    for (int i = 0; i < 10; ++i)
        r.violations.push_back({"n=" + std::to_string(i), "1", "2"});
    r.violation_count = 12; // two more than kept
    const std::string text = render_violations(r);
    CHECK(text.find("n=0: expected 1, got 2") != std::string::npos);
    CHECK(text.find("... and 2 more") != std::string::npos);
}

TEST_CASE("json rendering round-trips through a parser") {
    const auto reports = run_checks({"tw_counts", "morphism"}, 400);
    const auto doc = nlohmann::json::parse(render_json(reports));
    CHECK(doc["passed"] == true);
    CHECK(doc["total_violations"] == 0);
    REQUIRE(doc["checks"].size() == 2);
    CHECK(doc["checks"][0]["id"] == "tw_counts");
    CHECK(doc["checks"][1]["id"] == "morphism");
    CHECK(doc["checks"][0]["checked"].get<std::uint64_t>() > 0);
    CHECK(doc["checks"][0]["passed"] == true);
    CHECK(doc["checks"][0]["violations"].is_array());
}

TEST_CASE("json rendering of a failing synthetic report") {
    check_report r;
    r.id = "demo";
    r.checked = 5;
    r.violation_count = 1;
    r.violations.push_back({"n=3", "7", "8"});
    const auto doc = nlohmann::json::parse(render_json({r}));
    CHECK(doc["passed"] == false);
    CHECK(doc["total_violations"] == 1);
    CHECK(doc["checks"][0]["violations"][0]["input"] == "n=3");
    CHECK(doc["checks"][0]["violations"][0]["expected"] == "7");
    CHECK(doc["checks"][0]["violations"][0]["actual"] == "8");
}
