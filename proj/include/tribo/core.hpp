#pragma once
// The tribonacci substrate: the number sequence T, the substitution sigma,
// the finite words tw(l), the infinite ternary word t, letter-count (rank)
// profiles with a logarithmic fast path, and the four self-similar block
// partitions of t.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "tribo/checked.hpp"
#include "tribo/error.hpp"

namespace tribo {

// --- tribonacci numbers ----------------------------------------------------

// T(0)=0, T(1)=0, T(2)=1, T(l)=T(l-1)+T(l-2)+T(l-3); throws overflow_error
// once T(l) leaves the 64-bit range (around l = 76).
u64 tribonacci(u64 l);

// Largest l for which T(l) is representable.
u64 tribonacci_max_index();

// --- the substitution sigma and the words tw(l) -----------------------------

// sigma: 0 -> 01, 1 -> 02, 2 -> 0, extended letterwise.
std::string morphism_apply(std::string_view w);

// Unique preimage under sigma; throws validation_error (kind bad-symbol /
// "not in image") when w cannot be cut into blocks 01, 02, lone 0.
std::string morphism_inverse(std::string_view w);

// tw(0)="2", tw(1)="0", tw(2)="01", tw(3)="0102",
// tw(l)=tw(l-1)tw(l-2)tw(l-3); |tw(l)| = T(l+2). Materializing above
// tw_capacity() symbols throws overflow_error.
std::string tribo_word(u64 l);
u64 tw_capacity();

// --- the infinite word t -----------------------------------------------------

// t = 0102010010201... the fixed point of sigma starting at 0. Small indices
// are served from a shared, lazily sigma-grown prefix; indices past the cache
// cap fall back to the logarithmic block descent (same answers, no memory).
char t_at(u64 n);

// Letter of t at n computed purely by tw-block descent; O(log n), no cache.
char letter_at(u64 n);

// Pull-based reader of t(0), t(1), ...: a chain of sigma expanders over the
// seed "0", so memory stays logarithmic no matter how far it runs. Single
// owner; movable, not copyable.
class word_stream {
  public:
    word_stream();
    char next();
    u64 position() const { return pos_; } // index of the symbol next() returns

  private:
    static constexpr int kDepth = 80; // yields sigma^79(0): T(81) ~ 1e17 symbols
    std::array<char, kDepth> buf_{};  // per-level pending second symbol, 0 = none
    std::array<bool, kDepth> live_{};
    u64 pos_ = 0;
    char pull(int level);
};

// --- rank profiles -----------------------------------------------------------

// Letter counts over the prefix t(0..position): count_a counts 1s, count_b 0s,
// count_c 2s; weighted = count_a + 2*count_c. position = -1 is the legal empty
// prefix (all zero).
struct rank_profile {
    i64 position = -1;
    u64 count_a = 0;
    u64 count_b = 0;
    u64 count_c = 0;
    u64 weighted = 0;

    bool operator==(const rank_profile&) const = default;
};

// Exact counts by direct tally over the cached prefix (checkpointed so that
// repeated calls stay cheap). The correctness oracle for rank_fast.
rank_profile rank(i64 n);

// Same profile in O(log n): peel maximal tw(l) blocks off the prefix, using
// per-block letter counts (T(l+1), T(l), T(l-1)) — brute-verified for l <= 20
// in the test suite before this path is trusted.
rank_profile rank_fast(i64 n);

// --- characteristic values ---------------------------------------------------

enum class letter_class { A, B, C };

constexpr char letter_class_char(letter_class x) {
    return x == letter_class::A ? 'A' : (x == letter_class::B ? 'B' : 'C');
}

// Letter of t associated with the class: A <-> 1, B <-> 0, C <-> 2.
constexpr char class_symbol(letter_class x) {
    return x == letter_class::A ? '1' : (x == letter_class::B ? '0' : '2');
}

// Indicator that t(n) belongs to the class: k_A(n) = t(n)(2-t(n)),
// k_B(n) = (t(n)-1)(t(n)-2)/2, k_C(n) = t(n)(t(n)-1)/2.
u64 char_value(letter_class x, u64 n);

// --- self-similar partitions --------------------------------------------------

// Emits t as a concatenation of blocks chosen by t itself: variant v uses the
// three blocks sigma^(5-v)(0|1|2) (lengths 13/11/7, 7/6/4, 4/3/2, 2/2/1), the
// j-th block picked by t(j). Every prefix equals the same-length prefix of t.
class partition_stream {
  public:
    explicit partition_stream(int variant); // 1..4
    char next();

  private:
    word_stream driver_;
    std::array<std::string, 3> blocks_;
    std::string current_;
    std::size_t at_ = 0;
};

} // namespace tribo
