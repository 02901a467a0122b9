#include "tribo/sequences.hpp"

namespace tribo {

namespace {

u64 count_of(const rank_profile& p, letter_class x) {
    switch (x) {
        case letter_class::A: return p.count_a;
        case letter_class::B: return p.count_b;
        case letter_class::C: return p.count_c;
    }
    return 0;
}

} // namespace

u64 seq(letter_class x, u64 n) {
    // Smallest prefix length m with n+1 occurrences of the letter; the
    // position is m-1. C grows fastest: C(n) <= 7n+3 bounds all three.
    const u64 target = checked_add(n, 1);
    u64 lo = 0, hi = checked_add(checked_mul(7, n), 5);
    while (lo < hi) {
        const u64 mid = lo + (hi - lo) / 2;
        if (count_of(rank_fast(checked_to_i64(mid) - 1), x) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo - 1;
}

u64 seq_by_scan(letter_class x, u64 n) {
    word_stream s;
    const char want = class_symbol(x);
    u64 seen = 0;
    for (;;) {
        const u64 pos = s.position();
        if (s.next() == want && seen++ == n) return pos;
    }
}

u64 seq_closed(letter_class x, u64 n) {
    const rank_profile p = rank_fast(checked_to_i64(n) - 1);
    switch (x) {
        case letter_class::A: // 4n + 1 - z(n-1)
            return checked_sub(checked_add(checked_mul(4, n), 1), p.weighted);
        case letter_class::B: // 2n - z_C(n-1)
            return checked_sub(checked_mul(2, n), p.count_c);
        case letter_class::C: // 7n + 3 - [z_A(n-1) + 3 z_C(n-1)]
            return checked_sub(checked_add(checked_mul(7, n), 3),
                               checked_add(p.count_a, checked_mul(3, p.count_c)));
    }
    throw domain_error("unknown letter class");
}

u64 seq_b_typed(int type, u64 n) {
    switch (type) {
        case 0: // 2 C(n) - n
            return checked_sub(checked_mul(2, seq(letter_class::C, n)), n);
        case 1: // A(n) - 1
            return checked_sub(seq(letter_class::A, n), 1);
        case 2: // C(n) - 1
            return checked_sub(seq(letter_class::C, n), 1);
        default:
            throw domain_error("typed-zero selector must be 0, 1 or 2");
    }
}

classification classify(u64 n) {
    const char ch = letter_at(n);
    const letter_class x =
        ch == '1' ? letter_class::A : (ch == '0' ? letter_class::B : letter_class::C);
    return {x, count_of(rank_fast(checked_to_i64(n)), x) - 1};
}

u64 compose(letter_class x, letter_class y, u64 k, bool shifted) {
    const u64 a = seq(letter_class::A, k);
    const u64 b = seq(letter_class::B, k);
    const u64 ab = checked_add(a, b);
    u64 v = 0, delta = 0;
    using L = letter_class;
    if (x == L::A && y == L::A) { // 2(A+B) + k + 6
        v = checked_add(checked_mul(2, ab), checked_add(k, 6));
        delta = 3;
    } else if (x == L::A && y == L::B) { // A + B + k + 4
        v = checked_add(ab, checked_add(k, 4));
        delta = 4;
    } else if (x == L::A && y == L::C) { // 4A + 3B + 2(k+5)
        v = checked_add(checked_add(checked_mul(4, a), checked_mul(3, b)),
                        checked_mul(2, checked_add(k, 5)));
        delta = 2;
    } else if (x == L::B && y == L::A) { // A + B + k + 3
        v = checked_add(ab, checked_add(k, 3));
        delta = 2;
    } else if (x == L::B && y == L::B) { // A + 1
        v = checked_add(a, 1);
        delta = 2;
    } else if (x == L::B && y == L::C) { // 2(A+B) + k + 5
        v = checked_add(checked_mul(2, ab), checked_add(k, 5));
        delta = 1;
    } else if (x == L::C && y == L::A) { // 4A + 3B + 2(k+6)
        v = checked_add(checked_add(checked_mul(4, a), checked_mul(3, b)),
                        checked_mul(2, checked_add(k, 6)));
        delta = 6;
    } else if (x == L::C && y == L::B) { // 2(A+B) + k + 8
        v = checked_add(checked_mul(2, ab), checked_add(k, 8));
        delta = 7;
    } else { // CC: 7A + 6B + 4(k+5)
        v = checked_add(checked_add(checked_mul(7, a), checked_mul(6, b)),
                        checked_mul(4, checked_add(k, 5)));
        delta = 4;
    }
    return shifted ? v : checked_sub(v, delta);
}

u64 z_of_seq(letter_class x, u64 k) {
    const u64 a = seq(letter_class::A, k);
    const u64 b = seq(letter_class::B, k);
    switch (x) {
        case letter_class::A: // 2(A - B) - k - 1
            return checked_sub(checked_mul(2, checked_sub(a, b)), checked_add(k, 1));
        case letter_class::B: // 3B - A - k + 1
            return checked_sub(checked_add(checked_mul(3, b), 1), checked_add(a, k));
        case letter_class::C: // B + 2k + 3
            return checked_add(b, checked_add(checked_mul(2, k), 3));
    }
    throw domain_error("unknown letter class");
}

u64 rank_of_seq(letter_class x, letter_class y, u64 k) {
    using L = letter_class;
    if (x == y) return checked_add(k, 1); // z_X(X(k)) = k + 1
    const u64 a = seq(L::A, k);
    const u64 b = seq(L::B, k);
    if ((x == L::A && y == L::B) || (x == L::C && y == L::A)) // A - B - (k+1)
        return checked_sub(checked_sub(a, b), checked_add(k, 1));
    if ((x == L::A && y == L::C) || (x == L::B && y == L::A)) // B + 1
        return checked_add(b, 1);
    if (x == L::B && y == L::C) // A + 1
        return checked_add(a, 1);
    // z_C(B(k)) = 2B - A + 1
    return checked_sub(checked_add(checked_mul(2, b), 1), a);
}

i64 abc_identity_gap(u64 n) {
    const i64 c = checked_to_i64(seq(letter_class::C, n));
    const i64 a = checked_to_i64(seq(letter_class::A, n));
    const i64 b = checked_to_i64(seq(letter_class::B, n));
    return c - a - b - checked_to_i64(n) - 2;
}

u64 legacy_abc(char which, u64 n) {
    if (n < 1) throw domain_error("legacy sequences are 1-offset; n must be >= 1");
    switch (which) {
        case 'a': return checked_add(seq(letter_class::B, n - 1), 1);
        case 'b': return checked_add(seq(letter_class::A, n - 1), 1);
        case 'c': return checked_add(seq(letter_class::C, n - 1), 1);
        default: throw domain_error("legacy selector must be a, b or c");
    }
}

} // namespace tribo
