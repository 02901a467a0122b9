#pragma once
// Word alphabets and structural validators for the four string forms the
// library passes around:
//
//   ZT word   -- '0'/'1', leading 1, no "111"       (tribonacci Zeckendorf digits)
//   ABC word  -- '0'/'1'/'2' = B/A/C, ends in a single '0'
//   hat word  -- '0'/'1', starts with 0, ends "10", no "111" (padded+reversed ZT)
//   ABDX word -- 'A','B','.','x'; the four-letter intermediate of the
//                string-level conversion between the two systems
//
// Validators return std::nullopt on success so call sites can assert cheaply;
// require_* throws tribo::validation_error with the violation message.

#include <optional>
#include <string>
#include <string_view>

#include "tribo/error.hpp"

namespace tribo {

struct word_violation {
    enum class kind {
        empty,
        bad_symbol,       // character outside the word's alphabet
        leading_zero,     // ZT word not starting with 1
        triple_ones,      // "111" factor (ZT / hat)
        bad_terminal,     // ABC word not ending in '0'; ABDX shorter than "AB"
        double_b_terminal,// ABC word ending in "00" (terminal B block must be single)
        bad_start,        // hat word not starting with '0'
        bad_end,          // hat word not ending "10"; ABDX not ending in 'B'
        double_dot,       // ".." factor in ABDX
        bad_cross,        // 'x' not inside "xx." or terminal "xxB"
        bad_dot,          // '.' not preceded by 'A' or "xx"
        bad_a,            // 'A' not followed by '.' and not penultimate
    };
    kind what;
    std::size_t pos;
};

std::string to_string(word_violation::kind k);
std::string describe(const word_violation& v, std::string_view word_kind);

std::optional<word_violation> validate_zt(std::string_view w);
std::optional<word_violation> validate_abc(std::string_view w);
std::optional<word_violation> validate_hat(std::string_view w);
std::optional<word_violation> validate_abdx(std::string_view w);

void require_zt(std::string_view w);
void require_abc(std::string_view w);
void require_hat(std::string_view w);
void require_abdx(std::string_view w);

// Successor of a valid ZT word in length-then-lexicographic order ("1" -> "10"
// -> "11" -> "100" -> ...). Enumerating from "1" walks the representations of
// 1, 2, 3, ... in order without any arithmetic.
std::string zt_successor(std::string_view w);

} // namespace tribo
