#include "tribo/oeis.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "tribo/abc.hpp"
#include "tribo/core.hpp"
#include "tribo/error.hpp"
#include "tribo/sequences.hpp"
#include "tribo/zt.hpp"

#ifndef TRIBO_DATA_DIR_DEFAULT
#define TRIBO_DATA_DIR_DEFAULT "data"
#endif

namespace tribo {
namespace {

bool take_i64(const char*& p, const char* end, i64& out) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    const auto res = std::from_chars(p, end, out);
    if (res.ec != std::errc() || res.ptr == p) return false;
    p = res.ptr;
    return true;
}

// Decimal digits of a word read as an integer (leading zeros collapse:
// "0010" -> 10); words too long for 64 bits throw overflow_error.
i64 word_as_integer(std::string_view w) {
    i64 v = 0;
    const auto res = std::from_chars(w.data(), w.data() + w.size(), v);
    if (res.ec != std::errc() || res.ptr != w.data() + w.size())
        throw overflow_error("word does not fit in a 64-bit integer: " + std::string(w));
    return v;
}

// Companion recurrence with starts 0, 1, 0 (the ZT length-census numbers).
u64 companion(u64 n) {
    static const std::vector<u64> table = [] {
        std::vector<u64> t{0, 1, 0};
        for (;;) {
            u64 next;
            if (__builtin_add_overflow(t[t.size() - 1], t[t.size() - 2], &next) ||
                __builtin_add_overflow(next, t[t.size() - 3], &next))
                return t;
            t.push_back(next);
        }
    }();
    if (n >= table.size()) throw overflow_error("companion number exceeds 64 bits");
    return table[n];
}

u64 count_digit(std::string_view w, char d) {
    u64 c = 0;
    for (char ch : w)
        if (ch == d) ++c;
    return c;
}

i64 u(u64 v) { return checked_to_i64(v); }

std::vector<sequence_binding> make_bindings() {
    using LC = letter_class;
    std::vector<sequence_binding> v;
    auto add = [&](std::string id, std::string desc, i64 first, i64 ishift, i64 vshift,
                   std::function<i64(i64)> f) {
        v.push_back({std::move(id), std::move(desc), first, ishift, vshift, std::move(f)});
    };

    add("A000073", "tribonacci numbers T(n)", 0, 0, 0,
        [](i64 n) { return u(tribonacci(static_cast<u64>(n))); });
    add("A001590", "companion recurrence, starts 0, 1, 0", 0, 0, 0,
        [](i64 n) { return u(companion(static_cast<u64>(n))); });
    add("A003144", "1-based a(n) = B(n-1) + 1", 1, 0, 0,
        [](i64 n) { return u(legacy_abc('a', static_cast<u64>(n))); });
    add("A003145", "1-based b(n) = A(n-1) + 1", 1, 0, 0,
        [](i64 n) { return u(legacy_abc('b', static_cast<u64>(n))); });
    add("A003146", "1-based c(n) = C(n-1) + 1", 1, 0, 0,
        [](i64 n) { return u(legacy_abc('c', static_cast<u64>(n))); });
    add("A080843", "the ternary word t over 0, 1, 2", 0, 0, 0,
        [](i64 n) { return i64{t_at(static_cast<u64>(n)) - '0'}; });
    add("A092782", "the word t, 1-based, letters shifted to 1, 2, 3", 0, 1, -1,
        [](i64 n) { return i64{t_at(static_cast<u64>(n)) - '0'}; });
    add("A276791", "class-C indicator of t(n)", 0, 1, 0,
        [](i64 n) { return u(char_value(LC::C, static_cast<u64>(n))); });
    add("A276793", "class-B indicator of t(n)", 0, 1, 0,
        [](i64 n) { return u(char_value(LC::B, static_cast<u64>(n))); });
    add("A276794", "class-A indicator of t(n)", 0, 1, 0,
        [](i64 n) { return u(char_value(LC::A, static_cast<u64>(n))); });
    add("A276796", "prefix count of letter 0, z_B(n)", -1, 1, 0,
        [](i64 n) { return u(rank_fast(n).count_b); });
    add("A276797", "prefix count of letter 1, z_A(n)", -1, 1, 0,
        [](i64 n) { return u(rank_fast(n).count_a); });
    add("A276798", "prefix count of letter 2, z_C(n)", -1, 1, -1,
        [](i64 n) { return u(rank_fast(n).count_c); });
    add("A278038", "greedy tribonacci word of N, digits read as decimal", 1, 0, 0,
        [](i64 n) { return word_as_integer(zt_encode(static_cast<u64>(n))); });
    add("A278039", "positions of 0 in t: B(n)", 0, 0, 0,
        [](i64 n) { return u(seq(LC::B, static_cast<u64>(n))); });
    add("A278040", "positions of 1 in t: A(n)", 0, 0, 0,
        [](i64 n) { return u(seq(LC::A, static_cast<u64>(n))); });
    add("A278041", "positions of 2 in t: C(n)", 0, 0, 0,
        [](i64 n) { return u(seq(LC::C, static_cast<u64>(n))); });
    add("A278044", "length of the greedy word of N", 1, 0, 0,
        [](i64 n) { return u(zt_length(static_cast<u64>(n))); });
    add("A316713", "digit word of N over 1, 2, 3, read as decimal", 0, 0, 0, [](i64 n) {
        std::string w = abc_encode(static_cast<u64>(n));
        for (char& ch : w) ch = static_cast<char>(ch + 1); // 0/1/2 -> 1/2/3
        return word_as_integer(w);
    });
    add("A316714", "number of letters in the digit word of N", 0, 0, 0, [](i64 n) {
        return u(static_cast<u64>(abc_encode(static_cast<u64>(n)).size()));
    });
    add("A316715", "count of B (digit 0) in the digit word of N", 0, 0, 0, [](i64 n) {
        return u(count_digit(abc_encode(static_cast<u64>(n)), '0'));
    });
    add("A316716", "count of A (digit 1) in the digit word of N", 0, 0, 0, [](i64 n) {
        return u(count_digit(abc_encode(static_cast<u64>(n)), '1'));
    });
    add("A316717", "count of C (digit 2) in the digit word of N", 0, 0, 0, [](i64 n) {
        return u(count_digit(abc_encode(static_cast<u64>(n)), '2'));
    });
    add("A319195", "digit word of N read as decimal, leading zeros dropped", 0, 0, 0,
        [](i64 n) { return word_as_integer(abc_encode(static_cast<u64>(n))); });
    add("A319198", "weighted prefix count z(n)", 0, 0, 0,
        [](i64 n) { return u(rank_fast(n).weighted); });
    add("A319968", "zeros followed by another zero, B0(n)", 0, 1, 0,
        [](i64 n) { return u(seq_b_typed(0, static_cast<u64>(n))); });
    return v;
}

} // namespace

bfile parse_bfile(std::istream& in) {
    bfile f;
    std::string line;
    std::size_t lineno = 0;
    bool have_any = false;
    i64 expect = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p == end || *p == '#') continue;
        i64 idx = 0, val = 0;
        if (!take_i64(p, end, idx) || !take_i64(p, end, val))
            throw parse_error("malformed b-file line (want \"index value\")", lineno);
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p != end) throw parse_error("trailing characters after value", lineno);
        if (!have_any) {
            f.first = idx;
            have_any = true;
        } else if (idx != expect) {
            throw parse_error("non-contiguous index " + std::to_string(idx) + " (expected " +
                                  std::to_string(expect) + ")",
                              lineno);
        }
        f.values.push_back(val);
        expect = idx + 1;
    }
    if (!have_any) throw parse_error("b-file contains no data lines", lineno ? lineno : 1);
    return f;
}

bfile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open b-file: " + path);
    try {
        return parse_bfile(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.line);
    }
}

const std::vector<sequence_binding>& bindings() {
    static const std::vector<sequence_binding> b = make_bindings();
    return b;
}

const sequence_binding& binding_for(const std::string& id) {
    for (const auto& b : bindings())
        if (b.id == id) return b;
    throw domain_error("no sequence binding for id: " + id);
}

check_report compare(const sequence_binding& b, const bfile& f, u64 limit) {
    check_report r;
    r.id = b.id;
    i64 n = b.first_local;
    i64 n_last;
    if (limit > 0) {
        const i64 lo = n + b.index_shift; // tiny shifts, no overflow concern
        const i64 hi = lo + static_cast<i64>(limit) - 1;
        if (!f.covers(lo) || !f.covers(hi))
            throw error("insufficient b-file coverage for " + b.id + ": need indices [" +
                        std::to_string(lo) + ".." + std::to_string(hi) + "], file has [" +
                        std::to_string(f.first) + ".." + std::to_string(f.last()) + "]");
        n_last = n + static_cast<i64>(limit) - 1;
    } else {
        if (f.first > n + b.index_shift) n = f.first - b.index_shift;
        n_last = f.last() - b.index_shift;
        if (n_last < n)
            throw error("b-file shares no indices with " + b.id + " (file covers [" +
                        std::to_string(f.first) + ".." + std::to_string(f.last()) + "])");
    }
    r.from = n;
    r.to = n - 1;
    constexpr u64 kKeep = 10;
    for (; n <= n_last; ++n) {
        i64 mine;
        try {
            mine = b.local(n);
        } catch (const overflow_error&) {
            if (limit > 0)
                throw error("generator for " + b.id + " leaves 64-bit range at n=" +
                            std::to_string(n) + ", before the requested " +
                            std::to_string(limit) + " terms");
            break; // default mode: the generator's range ends the shared window
        }
        const i64 want = f.value(n + b.index_shift) + b.value_shift;
        ++r.checked;
        r.to = n;
        if (mine != want) {
            ++r.violation_count;
            if (r.violations.size() < kKeep)
                r.violations.push_back(
                    {"n=" + std::to_string(n), std::to_string(want), std::to_string(mine)});
        }
    }
    if (r.checked == 0) throw error("no terms compared for " + b.id);
    return r;
}

std::string fixture_path(const std::string& id, const std::string& dir) {
    if (id.empty() || id[0] != 'A')
        throw domain_error("sequence id must look like A000000, got: " + id);
    return dir + "/b" + id.substr(1) + ".txt";
}

std::string data_dir() {
    if (const char* env = std::getenv("TRIBO_DATA_DIR"); env && *env) return env;
    return TRIBO_DATA_DIR_DEFAULT;
}

} // namespace tribo
