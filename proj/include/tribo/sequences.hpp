#pragma once
// The complementary position sequences A, B, C of the ternary word t
// (positions of letters 1, 0, 2), the typed-zero subsequences B0/B1/B2,
// membership classification, and the closed-form identity catalog that the
// verify suite exercises: closed forms for the sequences themselves, for the
// prefix counts, for nested applications X(Y(k)) and for counts at sequence
// positions.

#include "tribo/core.hpp"

namespace tribo {

// n-th position of the class letter (0-offset). Logarithmic: binary search of
// the position by rank_fast.
u64 seq(letter_class x, u64 n);

// Same value by walking the word and counting — the slow correctness oracle.
u64 seq_by_scan(letter_class x, u64 n);

// Closed forms: A(n) = 4n+1-z(n-1), B(n) = 2n-z_C(n-1),
// C(n) = 7n+3-[z_A(n-1)+3z_C(n-1)].
u64 seq_closed(letter_class x, u64 n);

// n-th position k with t(k)=0 and t(k+1)=type: B0(n)=2C(n)-n, B1(n)=A(n)-1,
// B2(n)=C(n)-1.
u64 seq_b_typed(int type, u64 n);

struct classification {
    letter_class letter;
    u64 index; // seq(letter, index) == the classified position
    bool operator==(const classification&) const = default;
};

// Which sequence position n belongs to, and where: letter from t(n), index =
// (count of that letter through n) - 1. O(log n).
classification classify(u64 n);

// Closed form for the composition X(Y(k)+1) (shifted) or X(Y(k)) (plain);
// agrees with nested seq evaluation. Nine letter pairs, each with its own
// linear form in A(k), B(k), k.
u64 compose(letter_class x, letter_class y, u64 k, bool shifted);

// Closed form for the weighted count z at a sequence position:
// z(A(k)) = 2(A(k)-B(k))-k-1, z(B(k)) = -A(k)+3B(k)-k+1, z(C(k)) = B(k)+2k+3.
u64 z_of_seq(letter_class x, u64 k);

// Closed form for a letter count at a sequence position, z_X(Y(k)); the
// diagonal is z_X(X(k)) = k+1.
u64 rank_of_seq(letter_class x, letter_class y, u64 k);

// C(n) - (A(n) + B(n)) - (n + 2), identically zero; returned (not asserted)
// so the verify suite can report any violation found.
i64 abc_identity_gap(u64 n);

// The 1-offset companion sequences a(n) = B(n-1)+1, b(n) = A(n-1)+1,
// c(n) = C(n-1)+1 (OEIS A003144/A003145/A003146); n >= 1.
u64 legacy_abc(char which, u64 n);

} // namespace tribo
