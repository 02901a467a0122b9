#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "tribo/core.hpp"
#include "tribo/oeis.hpp"
#include "tribo/sequences.hpp"

using namespace tribo;

static bfile parse(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

TEST_CASE("b-file parsing: plain lines") {
    const bfile f = parse("0 1\n1 5\n2 8\n");
    CHECK(f.first == 0);
    REQUIRE(f.values.size() == 3);
    CHECK(f.value(0) == 1);
    CHECK(f.value(1) == 5);
    CHECK(f.value(2) == 8);
    CHECK(f.covers(2));
    CHECK(!f.covers(3));
    CHECK(!f.covers(-1));
    CHECK(f.last() == 2);
}

TEST_CASE("b-file parsing: comments, blanks, CRLF, negative start") {
    const bfile f = parse("# comment\r\n\r\n  \n-1 0\r\n0 7\n");
    CHECK(f.first == -1);
    REQUIRE(f.values.size() == 2);
    CHECK(f.value(-1) == 0);
    CHECK(f.value(0) == 7);
}

TEST_CASE("b-file parsing: extra spacing tolerated, garbage is not") {
    const bfile ok = parse("  3   12 \n 4\t13\n");
    CHECK(ok.first == 3);
    CHECK(ok.value(4) == 13);

    CHECK_THROWS_AS((void)parse("0 x\n"), parse_error);
    try {
        (void)parse("0 1\n1 y\n");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS((void)parse("0 1 2\n"), parse_error);
    CHECK_THROWS_AS((void)parse("7\n"), parse_error);
    CHECK_THROWS_AS((void)parse(""), parse_error);
}

TEST_CASE("b-file parsing: index gaps rejected with the line number") {
    try {
        (void)parse("0 1\n1 5\n3 9\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("non-contiguous") != std::string::npos);
    }
}

TEST_CASE("binding table: sorted, unique, complete") {
    const auto& all = bindings();
    CHECK(all.size() == 26);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (const char* id : {"A000073", "A001590", "A003144", "A080843", "A092782", "A276796",
                           "A278038", "A278040", "A316714", "A319195", "A319198", "A319968"})
        CHECK_NOTHROW((void)binding_for(id));
    CHECK_THROWS_AS((void)binding_for("A999999"), domain_error);
    CHECK_THROWS_AS((void)binding_for(""), domain_error);
}

TEST_CASE("binding generators: spot values under their conventions") {
    CHECK(binding_for("A278040").local(0) == 1);  // first position of letter 1
    CHECK(binding_for("A278039").local(0) == 0);
    CHECK(binding_for("A278041").local(3) == 23);
    CHECK(binding_for("A080843").local(3) == 2);
    CHECK(binding_for("A092782").local(0) == 0);  // local value; file stores +1
    CHECK(binding_for("A003144").local(1) == 1);
    CHECK(binding_for("A003145").local(1) == 2);
    CHECK(binding_for("A003146").local(1) == 4);
    CHECK(binding_for("A276796").local(-1) == 0); // empty prefix counts
    CHECK(binding_for("A276798").local(-1) == 0);
    CHECK(binding_for("A278038").local(8) == 1001);
    CHECK(binding_for("A278044").local(8) == 4);
    CHECK(binding_for("A316713").local(0) == 1);  // "0" -> "1"
    CHECK(binding_for("A316713").local(38) == 21131);
    CHECK(binding_for("A316714").local(38) == 5);
    CHECK(binding_for("A319195").local(4) == 10); // "0010" loses its zeros
    CHECK(binding_for("A319198").local(3) == 3);
    CHECK(binding_for("A319968").local(0) == 6);
    CHECK(binding_for("A000073").local(10) == 81);
    CHECK(binding_for("A000073").local(11) == 149);
    CHECK(binding_for("A001590").local(9) == 37);
}

// Build a faithful synthetic b-file for a binding: value at index n+shift is
// local(n) - value_shift.
static bfile synthesize(const sequence_binding& b, i64 terms) {
    bfile f;
    f.first = b.first_local + b.index_shift;
    for (i64 n = b.first_local; n < b.first_local + terms; ++n)
        f.values.push_back(b.local(n) - b.value_shift);
    return f;
}

TEST_CASE("compare: every binding agrees with its own synthetic file") {
    for (const auto& b : bindings()) {
        if (b.id == "A000073" || b.id == "A001590") continue; // overflow below 300 terms
        CAPTURE(b.id);
        const bfile f = synthesize(b, 300);
        const auto r = compare(b, f, 0);
        CHECK(r.passed());
        CHECK(r.checked == 300);
        CHECK(r.from == b.first_local);
        CHECK(r.to == b.first_local + 299);
    }
}

TEST_CASE("compare: explicit limit demands exactly that coverage") {
    const auto& b = binding_for("A278040");
    const bfile f = synthesize(b, 100);
    const auto r = compare(b, f, 100);
    CHECK(r.passed());
    CHECK(r.checked == 100);
    CHECK_THROWS_AS((void)compare(b, f, 101), error);
}

TEST_CASE("compare: off-by-one binding is caught on every term") {
    const auto& good = binding_for("A278040");
    sequence_binding bad = good;
    bad.local = [&](i64 n) { return good.local(n) + 1; }; // deliberate drift
    const bfile f = synthesize(good, 50);
    const auto r = compare(bad, f, 0);
    CHECK(!r.passed());
    CHECK(r.violation_count == 50);
    CHECK(r.violations.size() == 10); // cap keeps the first few
    CHECK(r.violations[0].input == "n=0");
    CHECK(r.violations[0].expected == "1");
    CHECK(r.violations[0].actual == "2");
}

TEST_CASE("compare: wrong index shift is a negative control") {
    const auto& good = binding_for("A319968"); // true index_shift is 1
    sequence_binding bad = good;
    bad.index_shift = 0;
    const bfile f = synthesize(good, 80);
    const auto r = compare(bad, f, 0);
    CHECK(!r.passed()); // reading the file one slot early shifts every value
}

TEST_CASE("compare: file window narrower than the generator") {
    const auto& b = binding_for("A278039"); // first_local 0
    bfile f = synthesize(b, 60);
    // chop the front: file now starts at index 10
    f.values.erase(f.values.begin(), f.values.begin() + 10);
    f.first = 10;
    const auto r = compare(b, f, 0);
    CHECK(r.passed());
    CHECK(r.from == 10);
    CHECK(r.checked == 50);
}

TEST_CASE("compare: no shared indices is an error") {
    const auto& b = binding_for("A278044"); // first_local 1
    bfile f;
    f.first = -5;
    f.values = {0, 0, 0};
    CHECK_THROWS_AS((void)compare(b, f, 0), error);
}

TEST_CASE("compare: generator running out of 64-bit range ends the window") {
    const auto& b = binding_for("A000073");
    i64 end = 0; // first index the generator cannot produce
    for (;; ++end) {
        try {
            (void)b.local(end);
        } catch (const overflow_error&) {
            break;
        }
    }
    bfile f;
    f.first = 0;
    for (i64 n = 0; n < end; ++n) f.values.push_back(b.local(n));
    for (int i = 0; i < 50; ++i) f.values.push_back(0); // junk past the edge
    const auto deflt = compare(b, f, 0);
    CHECK(deflt.passed());
    CHECK(deflt.checked == static_cast<u64>(end));
    CHECK(deflt.to == end - 1);
    CHECK_THROWS_AS((void)compare(b, f, static_cast<u64>(end) + 10), error);
}

TEST_CASE("fixture paths and data dir resolution") {
    CHECK(fixture_path("A278040", "/somewhere") == "/somewhere/b278040.txt");
    CHECK(fixture_path("A000073", "d") == "d/b000073.txt");
    CHECK_THROWS_AS((void)fixture_path("278040", "d"), domain_error);
    CHECK_THROWS_AS((void)fixture_path("", "d"), domain_error);
    CHECK(!data_dir().empty());
}

TEST_CASE("bundled fixtures compare clean") {
    for (const char* id :
         {"A080843", "A278038", "A278039", "A278040", "A278041", "A278044", "A319195"}) {
        CAPTURE(id);
        const auto& b = binding_for(id);
        const bfile f = load_bfile(fixture_path(id, data_dir()));
        const auto r = compare(b, f, 0);
        CHECK(r.passed());
        CHECK(r.checked >= 1000);
    }
}

TEST_CASE("load_bfile: missing file is a clean error") {
    CHECK_THROWS_AS((void)load_bfile("/no/such/dir/b000000.txt"), error);
}
