// Acceptance gate: one line per criterion, pass/fail, with the runtime
// budgets enforced. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "golden_tables.hpp"
#include "tribo/abc.hpp"
#include "tribo/core.hpp"
#include "tribo/oeis.hpp"
#include "tribo/sequences.hpp"
#include "tribo/transform.hpp"
#include "tribo/verify.hpp"
#include "tribo/zt.hpp"

using namespace tribo;

namespace {

int failures = 0;

// Runs one criterion: body returns true on pass; elapsed time must stay
// under budget_s (0 = no budget). Any exception is a failure.
void criterion(int num, const char* what, double budget_s, bool (*body)()) {
    bool ok = false;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_s > 0 && secs > budget_s) {
        ok = false;
        note = " [over budget of " + std::to_string(budget_s) + "s]";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s (%.2fs)%s\n", num, ok ? "PASS" : "FAIL", what, secs,
                note.c_str());
    std::fflush(stdout);
}

bool tables_1() {
    for (u64 n = 0; n < 80; ++n) {
        if (static_cast<u64>(t_at(n) - '0') != golden::kT80[n]) return false;
        if (seq(letter_class::A, n) != golden::kA80[n]) return false;
        if (seq(letter_class::B, n) != golden::kB80[n]) return false;
        if (seq(letter_class::C, n) != golden::kC80[n]) return false;
    }
    return true;
}

bool tables_2() {
    for (u64 n = 1; n <= 100; ++n)
        if (zt_encode(n) != golden::kGreedy100[n - 1]) return false;
    return true;
}

bool tables_3() {
    for (u64 n = 1; n <= 100; ++n)
        if (abc_encode(n) != golden::kDigits100[n - 1]) return false;
    return true;
}

bool worked_examples() {
    greedy_trace tr;
    if (zt_encode(263, tr) != "110101010") return false;
    if (tr.remainders != std::vector<u64>{263, 114, 33, 9, 2, 0}) return false;
    if (tr.floors != std::vector<u64>{149, 81, 24, 7, 2}) return false;
    if (tr.indices != std::vector<u64>{8, 7, 5, 3, 1}) return false;

    std::vector<classification> chain;
    if (abc_encode(38, chain) != "10020") return false;
    const std::vector<classification> want{{letter_class::A, 11},
                                           {letter_class::B, 6},
                                           {letter_class::B, 3},
                                           {letter_class::C, 0},
                                           {letter_class::B, 0}};
    return chain == want;
}

bool equivalence_both_ways() {
    for (u64 n = 1; n <= 100000; ++n) {
        const std::string w = zt_encode(n);
        const std::string a = abc_encode(n);
        if (convert(w) != a) return false;
        if (convert_back(a) != w) return false;
    }
    return true;
}

bool no_violations(const std::vector<check_report>& reports) {
    bool ok = true;
    for (const auto& r : reports) {
        if (!r.passed()) {
            std::fprintf(stderr, "  %s\n", render_line(r).c_str());
            ok = false;
        }
    }
    return ok;
}

bool identity_catalog() {
    const auto big = run_checks({"closed_forms", "b_typed", "delta", "rank_closed",
                                 "weighted_at_seq", "rank_at_seq", "gap_identity",
                                 "char_partition"},
                                100000);
    const auto comp = run_checks({"compose"}, 10000);
    return no_violations(big) && no_violations(comp);
}

bool partitions_all() { return no_violations(run_checks({"partitions"}, 10000)); }

bool census_exact() {
    const auto res = tribon_census(10000);
    const auto& t3 = admissible_tribons();
    const auto& t2 = admissible_doublets();
    if (res.tribons.size() != t3.size()) return false;
    for (const auto& [w, n] : res.tribons) {
        if (!t3.count(w)) return false;
        (void)n;
    }
    for (const auto& [w, n] : res.doublets) {
        if (!t2.count(w)) return false;
        (void)n;
    }
    return true;
}

bool small_bijectivity() {
    const auto reports = run_checks({"zt_uniqueness", "abc_uniqueness"}, 1);
    if (!no_violations(reports)) return false;
    // both enumerations must actually have covered their full word sets
    for (const auto& r : reports) {
        if (r.id == "zt_uniqueness" && r.checked < 2 * 1704) return false;
        if (r.id == "abc_uniqueness" && r.checked < 2 * 19683) return false;
    }
    return true;
}

bool counting_oracle() {
    for (i64 n = -1; n <= 1000000; ++n)
        if (!(rank(n) == rank_fast(n))) return false;
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<u64> dist(0, 1000000000);
    for (int i = 0; i < 1000; ++i) {
        const u64 p = dist(rng);
        const auto cl = classify(p);
        if (seq(cl.letter, cl.index) != p) return false;
        if (letter_at(p) != class_symbol(cl.letter)) return false;
    }
    return true;
}

bool fixtures_clean() {
    for (const char* id :
         {"A080843", "A278038", "A278039", "A278040", "A278041", "A278044", "A319195"}) {
        const auto& b = binding_for(id);
        const auto r = compare(b, load_bfile(fixture_path(id, data_dir())), 0);
        if (!r.passed() || r.checked < 1000) {
            std::fprintf(stderr, "  %s\n", render_line(r).c_str());
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "word letters and positions reproduce the frozen 80-term table", 1.0, tables_1);
    criterion(2, "greedy encodings reproduce the frozen 100-word table", 1.0, tables_2);
    criterion(3, "digit encodings reproduce the frozen 100-word table", 1.0, tables_3);
    criterion(4, "worked examples: greedy trace of 263, classification chain of 38", 0,
              worked_examples);
    criterion(5, "string transform equals both codecs for N <= 100000, both directions", 30.0,
              equivalence_both_ways);
    criterion(6, "identity catalog holds to 100000 (compositions to 10000)", 60.0,
              identity_catalog);
    criterion(7, "all four block partitions reproduce the word, 10000 symbols each", 0,
              partitions_all);
    criterion(8, "factor census over 10000 words: exactly 20 length-3, within 11 length-2", 0,
              census_exact);
    criterion(9, "bijectivity at small scale: every word to length 12 (greedy) / 10 (digit)", 0,
              small_bijectivity);
    criterion(10, "counting oracle: descent = tally to 1e6, select consistent to 1e9", 30.0,
              counting_oracle);
    criterion(11, "bundled b-file fixtures compare with zero mismatches", 0, fixtures_clean);

    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all 11 criteria passed\n");
    return failures;
}
