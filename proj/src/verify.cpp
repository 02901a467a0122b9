#include "tribo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>

#include "tribo/abc.hpp"
#include "tribo/core.hpp"
#include "tribo/sequences.hpp"
#include "tribo/transform.hpp"
#include "tribo/words.hpp"
#include "tribo/zt.hpp"

namespace tribo {
namespace {

template <class T>
std::string str(const T& v) {
    if constexpr (std::is_same_v<T, char>) return std::string(1, v);
    else if constexpr (std::is_convertible_v<T, std::string>) return std::string(v);
    else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
    else return std::to_string(v);
}

// Accumulates one check's report: counts every comparison, keeps the first
// `cap` violations verbatim.
struct collector {
    check_report r;
    u64 cap;

    collector(const char* id, u64 cap_) : cap(cap_) { r.id = id; }

    void range(i64 a, i64 b) {
        r.from = a;
        r.to = b;
    }

    template <class A, class B>
    void expect(const std::string& input, const A& expected, const B& actual) {
        ++r.checked;
        if (expected == actual) return;
        ++r.violation_count;
        if (r.violations.size() < cap) r.violations.push_back({input, str(expected), str(actual)});
    }

    void expect_true(const std::string& input, bool ok, const std::string& what) {
        ++r.checked;
        if (ok) return;
        ++r.violation_count;
        if (r.violations.size() < cap) r.violations.push_back({input, what, "violated"});
    }
};

std::string at(const char* var, u64 v) { return std::string(var) + "=" + std::to_string(v); }
std::string at(const char* var, i64 v) { return std::string(var) + "=" + std::to_string(v); }

constexpr letter_class kClasses[3] = {letter_class::A, letter_class::B, letter_class::C};

// ---- word / rank layer -------------------------------------------------------

check_report chk_t_prefix(u64 L, u64 cap) {
    collector c("t_prefix", cap);
    const u64 bound = std::min<u64>(L, 200000);
    word_stream ws;
    std::string prefix;
    prefix.reserve(bound);
    for (u64 m = 0; m < bound; ++m) {
        const char s = ws.next();
        prefix.push_back(s);
        c.expect(at("n", m), t_at(m), s);
    }
    // the largest block word fitting the prefix must BE the prefix
    u64 l = 2;
    while (tribonacci(l + 3) <= bound) ++l;
    const std::string tw = tribo_word(l);
    c.expect("tw(" + std::to_string(l) + ")", prefix.substr(0, tw.size()), tw);
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_tw_counts(u64 L, u64 cap) {
    collector c("tw_counts", cap);
    const u64 lmax = std::min<u64>(std::max<u64>(L, 6), 24); // structural cap
    std::string w0 = tribo_word(1), w1 = tribo_word(2);
    for (u64 l = 3; l <= lmax; ++l) {
        const std::string w = tribo_word(l);
        c.expect(at("l", l) + " recursion", w1 + w0 + tribo_word(l - 3), w);
        u64 ones = 0, zeros = 0, twos = 0;
        for (char ch : w) (ch == '1' ? ones : (ch == '0' ? zeros : twos))++;
        c.expect(at("l", l) + " |tw|", tribonacci(l + 2), static_cast<u64>(w.size()));
        c.expect(at("l", l) + " ones", tribonacci(l), ones);
        c.expect(at("l", l) + " zeros", tribonacci(l + 1), zeros);
        c.expect(at("l", l) + " twos", tribonacci(l - 1), twos);
        w0 = std::move(w1);
        w1 = w;
    }
    c.range(3, static_cast<i64>(lmax));
    return c.r;
}

check_report chk_morphism(u64 L, u64 cap) {
    collector c("morphism", cap);
    const u64 bound = std::min<u64>(L, 50000);
    word_stream ws;
    std::string prefix;
    prefix.reserve(bound);
    for (u64 m = 0; m < bound; ++m) prefix.push_back(ws.next());
    const u64 step = std::max<u64>(1, bound / 400);
    for (u64 m = 1; 2 * m < bound; m += step) {
        const std::string p = prefix.substr(0, m);
        const std::string img = morphism_apply(p);
        c.expect(at("m", m) + " image-prefix", prefix.substr(0, img.size()), img);
        c.expect(at("m", m) + " inverse", p, morphism_inverse(img));
    }
    for (u64 l = 1; l + 1 <= 16; ++l)
        c.expect(at("l", l) + " sigma(tw)", tribo_word(l + 1), morphism_apply(tribo_word(l)));
    c.range(1, static_cast<i64>(bound) / 2);
    return c.r;
}

check_report chk_rank_eq(u64 L, u64 cap) {
    collector c("rank_eq", cap);
    const i64 bound = static_cast<i64>(std::min<u64>(L, 2000000));
    for (i64 n = -1; n <= bound; ++n) {
        const auto slow = rank(n);
        const auto fast = rank_fast(n);
        c.expect_true(at("n", n), slow == fast,
                      "tally (" + std::to_string(slow.count_a) + "," + std::to_string(slow.count_b) +
                          "," + std::to_string(slow.count_c) + ") == descent (" +
                          std::to_string(fast.count_a) + "," + std::to_string(fast.count_b) + "," +
                          std::to_string(fast.count_c) + ")");
    }
    c.range(-1, bound);
    return c.r;
}

check_report chk_rank_stream(u64 L, u64 cap) {
    collector c("rank_stream", cap);
    const u64 bound = std::min<u64>(L, 2000000);
    const u64 stride = std::max<u64>(1, bound / 2000);
    word_stream ws;
    u64 a = 0, b = 0, z = 0;
    for (u64 m = 0; m < bound; ++m) {
        const char ch = ws.next();
        (ch == '1' ? a : (ch == '0' ? b : z))++;
        if (m % stride == 0 || m == bound - 1) {
            const auto p = rank_fast(static_cast<i64>(m));
            c.expect(at("n", m) + " ones", a, p.count_a);
            c.expect(at("n", m) + " zeros", b, p.count_b);
            c.expect(at("n", m) + " twos", z, p.count_c);
        }
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_char_partition(u64 L, u64 cap) {
    collector c("char_partition", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 n = 0; n < bound; ++n) {
        const u64 ka = char_value(letter_class::A, n);
        const u64 kb = char_value(letter_class::B, n);
        const u64 kc = char_value(letter_class::C, n);
        c.expect(at("n", n) + " sum", u64{1}, ka + kb + kc);
        const char ch = t_at(n);
        const u64 hit = ch == '1' ? ka : (ch == '0' ? kb : kc);
        c.expect(at("n", n) + " indicator", u64{1}, hit);
    }
    const u64 stride = std::max<u64>(1, bound / 500);
    for (u64 n = 0; n < bound; n += stride) {
        const auto p = rank_fast(static_cast<i64>(n));
        c.expect(at("n", n) + " count-sum", n + 1, p.count_a + p.count_b + p.count_c);
        c.expect(at("n", n) + " weighted", p.count_a + 2 * p.count_c, p.weighted);
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_partitions(u64 L, u64 cap) {
    collector c("partitions", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (int v = 1; v <= 4; ++v) {
        partition_stream ps(v);
        word_stream ws;
        for (u64 m = 0; m < bound; ++m)
            c.expect("variant=" + std::to_string(v) + " " + at("n", m), ws.next(), ps.next());
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

// ---- sequence identities -------------------------------------------------------

check_report chk_complementarity(u64 L, u64 cap) {
    collector c("complementarity", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 n = 0; n < bound; ++n) {
        const auto cl = classify(n);
        c.expect(at("n", n) + " classify", n, seq(cl.letter, cl.index));
        int members = 0;
        for (auto x : kClasses) {
            const auto p = rank_fast(static_cast<i64>(n));
            const u64 cnt = x == letter_class::A ? p.count_a
                          : x == letter_class::B ? p.count_b
                                                 : p.count_c;
            if (cnt > 0 && seq(x, cnt - 1) == n) ++members;
        }
        c.expect(at("n", n) + " membership", 1, members);
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_select_scan(u64 L, u64 cap) {
    collector c("select_scan", cap);
    const u64 bound = std::min<u64>(checked_mul(std::min<u64>(L, u64{1} << 40), 7), 700000);
    word_stream ws;
    u64 idx[3] = {0, 0, 0};
    for (u64 p = 0; p < bound; ++p) {
        const char ch = ws.next();
        const int x = ch == '1' ? 0 : (ch == '0' ? 1 : 2);
        c.expect(letter_class_char(kClasses[x]) + ("(" + std::to_string(idx[x]) + ")"), p,
                 seq(kClasses[x], idx[x]));
        ++idx[x];
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_closed_forms(u64 L, u64 cap) {
    collector c("closed_forms", cap);
    const u64 bound = std::min<u64>(L, 2000000);
    for (u64 n = 0; n < bound; ++n)
        for (auto x : kClasses)
            c.expect(std::string(1, letter_class_char(x)) + "(" + std::to_string(n) + ")",
                     seq(x, n), seq_closed(x, n));
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_b_typed(u64 L, u64 cap) {
    collector c("b_typed", cap);
    const u64 bound = std::min<u64>(L, 100000);
    for (u64 n = 0; n < bound; ++n) {
        const u64 a = seq(letter_class::A, n);
        const u64 bb = seq(letter_class::B, n);
        const u64 cc = seq(letter_class::C, n);
        const auto p = rank_fast(static_cast<i64>(n) - 1);
        const u64 za = p.count_a, zc = p.count_c, z = p.weighted;
        const u64 b0 = seq_b_typed(0, n), b1 = seq_b_typed(1, n), b2 = seq_b_typed(2, n);
        c.expect(at("n", n) + " B0=2C-n", 2 * cc - n, b0);
        c.expect(at("n", n) + " B0 closed", 13 * n + 6 - 2 * (za + 3 * zc), b0);
        c.expect(at("n", n) + " B1=A-1", a - 1, b1);
        c.expect(at("n", n) + " B1 closed", 4 * n - z, b1);
        c.expect(at("n", n) + " B2=C-1", cc - 1, b2);
        c.expect(at("n", n) + " B2 closed", 7 * n + 2 - (za + 3 * zc), b2);
        (void)bb;
        // membership: a zero, followed by the typed letter
        c.expect(at("n", n) + " B0 letter", '0', t_at(b0));
        c.expect(at("n", n) + " B0 next", '0', t_at(b0 + 1));
        c.expect(at("n", n) + " B1 next", '1', t_at(b1 + 1));
        c.expect(at("n", n) + " B2 next", '2', t_at(b2 + 1));
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_delta(u64 L, u64 cap) {
    collector c("delta", cap);
    const u64 bound = std::min<u64>(L, 200000);
    word_stream ws;
    u64 prev[3] = {seq(letter_class::A, 0), seq(letter_class::B, 0), seq(letter_class::C, 0)};
    for (u64 k = 0; k < bound; ++k) {
        const u64 d = static_cast<u64>(ws.next() - '0'); // t(k)
        const u64 kc = char_value(letter_class::C, k);
        u64 cur[3];
        for (int i = 0; i < 3; ++i) cur[i] = seq(kClasses[i], k + 1);
        c.expect(at("k", k) + " dA", 4 - d, cur[0] - prev[0]);
        c.expect(at("k", k) + " dB", 2 - kc, cur[1] - prev[1]);
        c.expect(at("k", k) + " dC", 7 - d * (d + 1) / 2, cur[2] - prev[2]);
        for (int i = 0; i < 3; ++i) prev[i] = cur[i];
    }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_rank_closed(u64 L, u64 cap) {
    collector c("rank_closed", cap);
    const i64 bound = static_cast<i64>(std::min<u64>(L, 200000));
    for (i64 n = -1; n < bound; ++n) {
        const auto p = rank_fast(n);
        const u64 a1 = seq(letter_class::A, static_cast<u64>(n + 1));
        const u64 b1 = seq(letter_class::B, static_cast<u64>(n + 1));
        c.expect(at("n", n) + " z_A", 2 * b1 - a1 + 1, p.count_a);
        c.expect(at("n", n) + " z_B", a1 - b1 - static_cast<u64>(n + 2), p.count_b);
        c.expect(at("n", n) + " z_C", 2 * static_cast<u64>(n + 1) - b1, p.count_c);
    }
    c.range(-1, bound - 1);
    return c.r;
}

check_report chk_weighted_at_seq(u64 L, u64 cap) {
    collector c("weighted_at_seq", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 k = 0; k < bound; ++k)
        for (auto x : kClasses) {
            const std::string input =
                std::string("z(") + letter_class_char(x) + "(" + std::to_string(k) + "))";
            c.expect(input, rank_fast(static_cast<i64>(seq(x, k))).weighted, z_of_seq(x, k));
        }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_compose(u64 L, u64 cap) {
    collector c("compose", cap);
    const u64 bound = std::min<u64>(L, 50000);
    for (u64 k = 0; k < bound; ++k)
        for (auto x : kClasses)
            for (auto y : kClasses) {
                const std::string pair =
                    std::string(1, letter_class_char(x)) + letter_class_char(y);
                const u64 inner = seq(y, k);
                c.expect(pair + "+ " + at("k", k), seq(x, inner + 1), compose(x, y, k, true));
                c.expect(pair + " " + at("k", k), seq(x, inner), compose(x, y, k, false));
            }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_rank_at_seq(u64 L, u64 cap) {
    collector c("rank_at_seq", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 k = 0; k < bound; ++k)
        for (auto x : kClasses)
            for (auto y : kClasses) {
                const auto p = rank_fast(static_cast<i64>(seq(y, k)));
                const u64 want = x == letter_class::A ? p.count_a
                               : x == letter_class::B ? p.count_b
                                                      : p.count_c;
                const std::string input = std::string("z_") + letter_class_char(x) + "(" +
                                          letter_class_char(y) + "(" + std::to_string(k) + "))";
                c.expect(input, want, rank_of_seq(x, y, k));
                if (x == y) c.expect(input + " diagonal", k + 1, rank_of_seq(x, y, k));
            }
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_gap_identity(u64 L, u64 cap) {
    collector c("gap_identity", cap);
    const u64 bound = std::min<u64>(L, u64{1} << 40);
    const u64 step = bound > 2000000 ? std::max<u64>(1, bound / 2000000) : 1;
    for (u64 n = 0; n < bound; n += step)
        c.expect(at("n", n), i64{0}, abc_identity_gap(n));
    c.range(0, static_cast<i64>(bound) - 1);
    return c.r;
}

check_report chk_legacy(u64 L, u64 cap) {
    collector c("legacy", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 n = 1; n <= bound; ++n) {
        c.expect(at("n", n) + " a", seq(letter_class::B, n - 1) + 1, legacy_abc('a', n));
        c.expect(at("n", n) + " b", seq(letter_class::A, n - 1) + 1, legacy_abc('b', n));
        c.expect(at("n", n) + " c", seq(letter_class::C, n - 1) + 1, legacy_abc('c', n));
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

// ---- greedy codec ---------------------------------------------------------------

check_report chk_zt_roundtrip(u64 L, u64 cap) {
    collector c("zt_roundtrip", cap);
    const u64 bound = std::max<u64>(L, 1);
    for (u64 n = 1; n <= bound; ++n) {
        const std::string w = zt_encode(n);
        c.expect(at("N", n), n, zt_decode(w));
        c.expect(at("N", n) + " length", static_cast<u64>(w.size()), zt_length(n));
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_zt_order(u64 L, u64 cap) {
    collector c("zt_order", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 1), 200000);
    std::string w = "1";
    for (u64 n = 1; n <= bound; ++n) {
        c.expect(at("N", n) + " encode", w, zt_encode(n));
        c.expect(at("N", n) + " decode", n, zt_decode(w));
        w = zt_successor(w);
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_zt_census(u64 L, u64 cap) {
    collector c("zt_census", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 100), 500000);
    std::vector<u64> tally;
    std::string w = "1";
    for (u64 n = 1; n <= bound; ++n) {
        if (w.size() >= tally.size()) tally.resize(w.size() + 1, 0);
        ++tally[w.size()];
        w = zt_successor(w);
    }
    // companion recurrence: 1, 2, 3, then sum of previous three
    std::vector<u64> expect{0, 1, 2, 3};
    while (expect.size() < tally.size() + 1)
        expect.push_back(expect[expect.size() - 1] + expect[expect.size() - 2] +
                         expect[expect.size() - 3]);
    u64 lmax = 0; // largest fully enumerated length: all of [T(l+2), T(l+3)-1] <= bound
    while (tribonacci(lmax + 4) - 1 <= bound) ++lmax;
    for (u64 l = 1; l <= lmax && l < tally.size(); ++l)
        c.expect(std::string("count(len=") + std::to_string(l) + ")", expect[l], tally[l]);
    c.range(1, static_cast<i64>(lmax));
    return c.r;
}

check_report chk_zt_uniqueness(u64 L, u64 cap) {
    collector c("zt_uniqueness", cap);
    const u64 lmax = 12; // structural cap: full enumeration of short words
    (void)L;
    std::set<u64> seen;
    std::string w = "1";
    u64 count = 0;
    while (w.size() <= lmax) {
        const u64 n = zt_decode(w);
        c.expect("w=" + w, w, zt_encode(n));
        c.expect_true("w=" + w, seen.insert(n).second, "distinct value");
        ++count;
        w = zt_successor(w);
    }
    // the decoded set must be exactly 1 .. T(lmax+3)-1
    c.expect("word count", tribonacci(lmax + 3) - 1, count);
    c.expect("max value", tribonacci(lmax + 3) - 1, *seen.rbegin());
    c.expect("min value", u64{1}, *seen.begin());
    c.range(1, static_cast<i64>(tribonacci(lmax + 3)) - 1);
    return c.r;
}

// ---- iterated-sequence codec ------------------------------------------------------

check_report chk_abc_roundtrip(u64 L, u64 cap) {
    collector c("abc_roundtrip", cap);
    const u64 bound = std::max<u64>(L, 1);
    for (u64 n = 0; n <= bound; ++n) c.expect(at("N", n), n, abc_decode(abc_encode(n)));
    c.range(0, static_cast<i64>(bound));
    return c.r;
}

check_report chk_abc_uniqueness(u64 L, u64 cap) {
    collector c("abc_uniqueness", cap);
    const u64 lmax = 10; // structural cap: all words "d...d0", penultimate != 0
    (void)L;
    std::set<u64> seen;
    u64 maxn = 0;
    u64 words = 0;
    // enumerate layer by layer, prefixing digits to valid words; a digit
    // prefixed onto "0" itself becomes the penultimate letter, so it may
    // not be '0'
    std::vector<std::string> layer{"0"};
    for (u64 len = 1; len <= lmax; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer) {
            const u64 n = abc_decode(w);
            c.expect("w=" + w, w, abc_encode(n));
            c.expect_true("w=" + w, seen.insert(n).second, "distinct value");
            maxn = std::max(maxn, n);
            ++words;
            for (char d : {'0', '1', '2'})
                if (w.size() > 1 || d != '0') next.push_back(std::string(1, d) + w);
        }
        layer = std::move(next);
    }
    u64 expected_words = 1;
    for (u64 i = 1; i < lmax; ++i) expected_words *= 3; // 3^(lmax-1)
    c.expect("word count", expected_words, words);
    c.expect("distinct values", expected_words, static_cast<u64>(seen.size()));
    c.range(0, static_cast<i64>(maxn));
    return c.r;
}

check_report chk_abc_termination(u64 L, u64 cap) {
    collector c("abc_termination", cap);
    const u64 bound = std::min<u64>(L, 200000);
    for (u64 n = 1; n <= bound; ++n)
        c.expect_true(at("N", n), classify(n).index < n, "classification index decreases");
    for (u64 k = 1; k <= std::min<u64>(bound, 50000); ++k)
        for (auto x : kClasses)
            c.expect_true(std::string(1, letter_class_char(x)) + "(" + std::to_string(k) + ")",
                          seq(x, k) > k, "position exceeds index");
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_abc_blocks(u64 L, u64 cap) {
    collector c("abc_blocks", cap);
    const u64 bound = std::min<u64>(L, 50000);
    for (u64 n = 0; n <= bound; ++n) {
        const std::string w = abc_encode(n);
        const auto bf = abc_blockform(w);
        c.expect(at("N", n) + " j", static_cast<u64>(bf.blocks.size()), bf.j);
        u64 sum = 0;
        bool adjacent_ok = true;
        for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
            sum += bf.blocks[i].second;
            if (i && bf.blocks[i].first == bf.blocks[i - 1].first) adjacent_ok = false;
        }
        c.expect_true(at("N", n) + " adjacency", adjacent_ok, "adjacent blocks differ");
        c.expect(at("N", n) + " letters", static_cast<u64>(w.size()), bf.letter_total);
        c.expect(at("N", n) + " exponents", sum + 1, bf.letter_total);
        c.expect(at("N", n) + " counts", static_cast<u64>(w.size()),
                 bf.count_a + bf.count_b + bf.count_c);
        if (!bf.blocks.empty())
            c.expect_true(at("N", n) + " last block", bf.blocks.back().first != letter_class::B,
                          "block before terminal is A or C");
    }
    c.range(0, static_cast<i64>(bound));
    return c.r;
}

// ---- transform pipeline ------------------------------------------------------------

check_report chk_equivalence(u64 L, u64 cap) {
    collector c("equivalence", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 1), 1000000);
    for (u64 n = 1; n <= bound; ++n) c.expect(at("N", n), abc_encode(n), convert(zt_encode(n)));
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_inversion(u64 L, u64 cap) {
    collector c("inversion", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 1), 1000000);
    std::string w = "1";
    for (u64 n = 1; n <= bound; ++n) {
        c.expect("w=" + w, w, convert_back(convert(w)));
        w = zt_successor(w);
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_versions(u64 L, u64 cap) {
    collector c("versions", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 1), 1000000);
    std::string w = "1";
    for (u64 n = 1; n <= bound; ++n) {
        const std::string abdx = hat_to_abdx(zt_to_hat(w));
        c.expect("w=" + w, abdx_to_hat(abdx, 1), abdx_to_hat(abdx, 2));
        w = zt_successor(w);
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_structural(u64 L, u64 cap) {
    collector c("structural", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 1), 200000);
    std::string w = "1";
    for (u64 n = 1; n <= bound; ++n) {
        const std::string hat = zt_to_hat(w);
        const std::string abdx = hat_to_abdx(hat);
        const std::string abc = abdx_to_abc(abdx);
        c.expect_true("w=" + w + " hat", !validate_hat(hat).has_value(), "valid hat word");
        c.expect_true("w=" + w + " abdx", !validate_abdx(abdx).has_value(), "valid abdx word");
        c.expect_true("w=" + w + " abc", !validate_abc(abc).has_value(), "valid abc word");
        c.expect("w=" + w + " reverse", abdx, abc_to_abdx(abc));
        w = zt_successor(w);
    }
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

check_report chk_census(u64 L, u64 cap) {
    collector c("census", cap);
    const u64 bound = std::min<u64>(std::max<u64>(L, 30), 50000);
    const auto res = tribon_census(bound);
    const auto& t3 = admissible_tribons();
    const auto& t2 = admissible_doublets();
    for (const auto& [w, n] : res.tribons) {
        c.expect_true("tribon " + w, t3.count(w) == 1, "admissible length-3 factor");
        (void)n;
    }
    for (const auto& [w, n] : res.doublets) {
        c.expect_true("doublet " + w, t2.count(w) == 1, "admissible length-2 factor");
        (void)n;
    }
    c.expect("tribons attained", static_cast<u64>(t3.size()),
             static_cast<u64>(res.tribons.size()));
    c.expect("doublets attained", static_cast<u64>(t2.size()),
             static_cast<u64>(res.doublets.size()));
    c.range(1, static_cast<i64>(bound));
    return c.r;
}

// ---- registry -----------------------------------------------------------------------

struct entry {
    const char* id;
    const char* description;
    check_report (*fn)(u64, u64);
};

constexpr entry kRegistry[] = {
    {"t_prefix", "stream, random access, and block words give the same ternary word", chk_t_prefix},
    {"tw_counts", "block word lengths and letter counts follow the tribonacci recurrence",
     chk_tw_counts},
    {"morphism", "substitution images of prefixes stay prefixes and invert cleanly", chk_morphism},
    {"rank_eq", "direct tally and logarithmic descent agree on all letter counts", chk_rank_eq},
    {"rank_stream", "letter counts accumulated from the stream match the descent", chk_rank_stream},
    {"char_partition", "exactly one class indicator fires at every position", chk_char_partition},
    {"partitions", "all four self-similar block partitions reproduce the word", chk_partitions},
    {"complementarity", "A, B, C index sets partition the nonnegative integers",
     chk_complementarity},
    {"select_scan", "position lookup by binary search matches a single stream pass",
     chk_select_scan},
    {"closed_forms", "rank-based closed forms reproduce A, B, and C", chk_closed_forms},
    {"b_typed", "zeros split by successor letter match their closed forms", chk_b_typed},
    {"delta", "first differences of A, B, C are functions of the driving letter", chk_delta},
    {"rank_closed", "prefix letter counts recovered from A and B values", chk_rank_closed},
    {"weighted_at_seq", "weighted count evaluated at A, B, C positions", chk_weighted_at_seq},
    {"compose", "pairwise compositions reduce to their linear forms", chk_compose},
    {"rank_at_seq", "letter counts at A, B, C positions match their closed forms", chk_rank_at_seq},
    {"gap_identity", "C(n) - A(n) - B(n) - n - 2 vanishes identically", chk_gap_identity},
    {"legacy", "one-based companion sequences equal the zero-based ones shifted", chk_legacy},
    {"zt_roundtrip", "greedy encode and decode invert each other", chk_zt_roundtrip},
    {"zt_order", "successor enumeration lists exactly the encodings in order", chk_zt_order},
    {"zt_census", "valid word counts per length follow the companion recurrence", chk_zt_census},
    {"zt_uniqueness", "every admissible binary word decodes to a distinct integer",
     chk_zt_uniqueness},
    {"abc_roundtrip", "digit encode and decode invert each other", chk_abc_roundtrip},
    {"abc_uniqueness", "every admissible digit word decodes to a distinct integer",
     chk_abc_uniqueness},
    {"abc_termination", "classification indices strictly decrease, so encoding halts",
     chk_abc_termination},
    {"abc_blocks", "run-length block form bookkeeping is consistent", chk_abc_blocks},
    {"equivalence", "string transform of the greedy word equals the digit encoding",
     chk_equivalence},
    {"inversion", "transform followed by inverse transform is the identity", chk_inversion},
    {"versions", "blockwise and letterwise hat reconstructions agree", chk_versions},
    {"structural", "pipeline intermediates satisfy their validators", chk_structural},
    {"census", "length-3 and length-2 factors stay within the admissible sets", chk_census},
};

} // namespace

const std::vector<check_info>& check_catalog() {
    static const std::vector<check_info> catalog = [] {
        std::vector<check_info> v;
        for (const auto& e : kRegistry) v.push_back({e.id, e.description});
        return v;
    }();
    return catalog;
}

std::vector<check_report> run_checks(const std::vector<std::string>& selection,
                                     u64 limit,
                                     unsigned jobs,
                                     u64 violation_cap) {
    std::vector<const entry*> chosen;
    if (selection.empty()) {
        for (const auto& e : kRegistry) chosen.push_back(&e);
    } else {
        std::set<std::string> want(selection.begin(), selection.end());
        for (const auto& e : kRegistry)
            if (want.erase(e.id)) chosen.push_back(&e);
        if (!want.empty()) throw domain_error("unknown check id: " + *want.begin());
    }
    if (limit == 0) throw domain_error("limit must be positive");

    std::vector<check_report> out(chosen.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= chosen.size()) return;
            const auto t0 = std::chrono::steady_clock::now();
            out[i] = chosen[i]->fn(limit, violation_cap);
            out[i].elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                   .count();
        }
    };
    unsigned n = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, chosen.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

} // namespace tribo
