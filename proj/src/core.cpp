#include "tribo/core.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace tribo {

// --- tribonacci numbers ----------------------------------------------------

namespace {

const std::vector<u64>& t_table() {
    // Built once, whole: T while it fits in 64 bits. ~76 entries.
    static const std::vector<u64> table = [] {
        std::vector<u64> t{0, 0, 1};
        for (;;) {
            u64 next;
            if (__builtin_add_overflow(t[t.size() - 1], t[t.size() - 2], &next) ||
                __builtin_add_overflow(next, t[t.size() - 3], &next))
                break;
            t.push_back(next);
        }
        return t;
    }();
    return table;
}

} // namespace

u64 tribonacci(u64 l) {
    const auto& t = t_table();
    if (l >= t.size())
        throw overflow_error("T(" + std::to_string(l) + ") exceeds the 64-bit range");
    return t[l];
}

u64 tribonacci_max_index() { return t_table().size() - 1; }

// --- sigma ------------------------------------------------------------------

std::string morphism_apply(std::string_view w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
            case '0': out += "01"; break;
            case '1': out += "02"; break;
            case '2': out += "0"; break;
            default:
                throw validation_error(
                    "invalid ternary word: bad-symbol at position " + std::to_string(i), i);
        }
    }
    return out;
}

std::string morphism_inverse(std::string_view w) {
    std::string out;
    out.reserve(w.size() / 2 + 1);
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != '0')
            throw validation_error(
                "word is not in the image of the substitution (block starting at position " +
                    std::to_string(i) + ")",
                i);
        if (i + 1 < w.size() && w[i + 1] == '1') {
            out += '0';
            i += 2;
        } else if (i + 1 < w.size() && w[i + 1] == '2') {
            out += '1';
            i += 2;
        } else {
            out += '2'; // lone 0: next symbol (if any) starts a new block
            i += 1;
        }
    }
    return out;
}

// --- tw(l) --------------------------------------------------------------------

u64 tw_capacity() { return u64{1} << 27; }

std::string tribo_word(u64 l) {
    switch (l) {
        case 0: return "2";
        case 1: return "0";
        case 2: return "01";
        case 3: return "0102";
        default: break;
    }
    if (tribonacci(l + 2) > tw_capacity())
        throw overflow_error("tw(" + std::to_string(l) + ") exceeds the word capacity of " +
                             std::to_string(tw_capacity()) + " symbols");
    std::string a = "0102", b = "01", c = "0"; // tw(3), tw(2), tw(1)
    for (u64 i = 4; i <= l; ++i) {
        std::string next;
        next.reserve(a.size() + b.size() + c.size());
        next.append(a).append(b).append(c);
        c = std::move(b);
        b = std::move(a);
        a = std::move(next);
    }
    return a;
}

// --- cached prefix of t ---------------------------------------------------------

namespace {

constexpr u64 kPrefixCap = u64{1} << 28;
constexpr std::size_t kCheckpointStride = 1024;

struct prefix_cache {
    std::mutex mu;
    std::string word = "0";
    // counts of (1s, 0s, 2s) in word[0 .. i*stride) at checkpoint i
    std::vector<std::array<u64, 3>> checkpoints{{0, 0, 0}};

    void ensure(u64 n) {
        if (n >= kPrefixCap)
            throw overflow_error("prefix cache capped at " + std::to_string(kPrefixCap) +
                                 " symbols; use the logarithmic paths for larger indices");
        while (word.size() <= n) word = morphism_apply(word);
        while ((checkpoints.size() - 1) * kCheckpointStride + kCheckpointStride <= word.size()) {
            auto c = checkpoints.back();
            const std::size_t from = (checkpoints.size() - 1) * kCheckpointStride;
            for (std::size_t i = from; i < from + kCheckpointStride; ++i) {
                const char ch = word[i];
                ++c[ch == '1' ? 0 : (ch == '0' ? 1 : 2)];
            }
            checkpoints.push_back(c);
        }
    }
};

prefix_cache& cache() {
    static prefix_cache c;
    return c;
}

// counts of "0102010010201" prefixes, for the descent base case: {ones, zeros, twos}
constexpr std::array<std::array<u64, 3>, 14> kBaseCounts = [] {
    constexpr std::string_view base = "0102010010201";
    std::array<std::array<u64, 3>, 14> out{};
    std::array<u64, 3> c{};
    out[0] = c;
    for (std::size_t i = 0; i < base.size(); ++i) {
        ++c[base[i] == '1' ? 0 : (base[i] == '0' ? 1 : 2)];
        out[i + 1] = c;
    }
    return out;
}();

// Largest table index j with T(j) <= m (m >= 1). The peeled block is tw(j-2).
std::size_t largest_block(u64 m) {
    const auto& t = t_table();
    auto it = std::upper_bound(t.begin() + 3, t.end(), m);
    return static_cast<std::size_t>(it - t.begin()) - 1;
}

} // namespace

char t_at(u64 n) {
    if (n >= kPrefixCap) return letter_at(n);
    auto& c = cache();
    std::lock_guard lock(c.mu);
    c.ensure(n);
    return c.word[n];
}

char letter_at(u64 n) {
    constexpr std::string_view base = "0102010010201";
    // Peel maximal tw-blocks until the index lands in the literal base prefix.
    while (n >= base.size()) n -= t_table()[largest_block(n)];
    return base[n];
}

rank_profile rank(i64 n) {
    if (n < -1) throw domain_error("rank position must be >= -1");
    rank_profile p;
    p.position = n;
    if (n == -1) return p;
    const u64 un = static_cast<u64>(n);
    std::array<u64, 3> counts{};
    if (un < kPrefixCap) {
        auto& c = cache();
        std::lock_guard lock(c.mu);
        c.ensure(un);
        const std::size_t cp = std::min(static_cast<std::size_t>(un + 1) / kCheckpointStride,
                                        c.checkpoints.size() - 1);
        counts = c.checkpoints[cp];
        for (std::size_t i = cp * kCheckpointStride; i <= static_cast<std::size_t>(un); ++i) {
            const char ch = c.word[i];
            ++counts[ch == '1' ? 0 : (ch == '0' ? 1 : 2)];
        }
    } else {
        // Past the cache cap: tally a fresh stream. Slow but exact and tiny.
        word_stream s;
        for (u64 i = 0; i <= un; ++i) {
            const char ch = s.next();
            ++counts[ch == '1' ? 0 : (ch == '0' ? 1 : 2)];
        }
    }
    p.count_a = counts[0];
    p.count_b = counts[1];
    p.count_c = counts[2];
    p.weighted = checked_add(p.count_a, checked_mul(2, p.count_c));
    return p;
}

rank_profile rank_fast(i64 n) {
    if (n < -1) throw domain_error("rank position must be >= -1");
    rank_profile p;
    p.position = n;
    if (n == -1) return p;
    const auto& t = t_table();
    u64 m = checked_add(checked_to_u64(n), 1); // symbols in the prefix
    u64 a = 0, b = 0, c = 0;
    while (m > 13) {
        // Block tw(l), l = j-2, contributes T(l) ones, T(l+1) zeros, T(l-1) twos.
        const std::size_t j = largest_block(m);
        a += t[j - 2];
        b += t[j - 1];
        c += t[j - 3];
        m -= t[j];
    }
    const auto& base = kBaseCounts[m];
    p.count_a = checked_add(a, base[0]);
    p.count_b = checked_add(b, base[1]);
    p.count_c = checked_add(c, base[2]);
    p.weighted = checked_add(p.count_a, checked_mul(2, p.count_c));
    return p;
}

// --- word stream ------------------------------------------------------------------

word_stream::word_stream() = default;

char word_stream::pull(int level) {
    if (level == kDepth - 1) {
        // seed word "0", consumed exactly once
        if (live_[level]) throw error("word stream exhausted its seed (beyond T(81) symbols)");
        live_[level] = true;
        return '0';
    }
    if (buf_[level] != 0) {
        const char c = buf_[level];
        buf_[level] = 0;
        return c;
    }
    const char c = pull(level + 1);
    // sigma images all start with 0; the second symbol (if any) is buffered
    switch (c) {
        case '0': buf_[level] = '1'; break;
        case '1': buf_[level] = '2'; break;
        default: break; // sigma(2) = 0, nothing pending
    }
    return '0';
}

char word_stream::next() {
    const char c = pull(0);
    ++pos_;
    return c;
}

// --- characteristic values -----------------------------------------------------------

u64 char_value(letter_class x, u64 n) {
    const int d = t_at(n) - '0';
    int v = 0;
    switch (x) {
        case letter_class::A: v = d * (2 - d); break;
        case letter_class::B: v = (d - 1) * (d - 2) / 2; break;
        case letter_class::C: v = d * (d - 1) / 2; break;
    }
    return static_cast<u64>(v);
}

// --- partitions ---------------------------------------------------------------------

partition_stream::partition_stream(int variant) {
    if (variant < 1 || variant > 4)
        throw domain_error("partition variant must be 1, 2, 3 or 4");
    blocks_ = {"0", "1", "2"};
    for (int i = 0; i < 5 - variant; ++i)
        for (auto& b : blocks_) b = morphism_apply(b);
}

char partition_stream::next() {
    if (at_ == current_.size()) {
        current_ = blocks_[static_cast<std::size_t>(driver_.next() - '0')];
        at_ = 0;
    }
    return current_[at_++];
}

} // namespace tribo
