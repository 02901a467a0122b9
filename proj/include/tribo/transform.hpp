#pragma once
// String-level conversion between the two numeration systems. Every function
// here maps words to words; none of them ever computes the represented value
// (this translation unit's library links without the codec or sequence
// layers, which is the enforcement).
//
// Pipeline:            zt_to_hat        hat_to_abdx       abdx_to_abc
//          ZT word  ------------>  hat --------------> ABDX ----------> ABC
//          ZT word  <------------  hat <-------------- ABDX <---------- ABC
//                      hat_to_zt        abdx_to_hat       abc_to_abdx
//
// ABDX words use 'A', 'B', '.' (dot), 'x' (cross).

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "tribo/words.hpp"

namespace tribo {

// 0 + reversed word + 0.
std::string zt_to_hat(std::string_view zt);

// Strip the enclosing zeros, reverse.
std::string hat_to_zt(std::string_view hat);

// The six positional rules; reads each symbol with <= 2 lookahead, drops the
// final 0: 0 before 0 -> B, 0 before 11 -> x, 0 before 10 -> A;
//          1 before 1 -> x, 1 before 0-then-more -> ., 1 before final 0 -> B.
std::string hat_to_abdx(std::string_view hat);

// A. -> 1, terminal AB -> 10, xx. -> 2, terminal xxB -> 20, B -> 0.
std::string abdx_to_abc(std::string_view abdx);

// Inverse of abdx_to_abc; rejects the single-letter word "0" (the pipeline
// covers N >= 1 only).
std::string abc_to_abdx(std::string_view abc);

// Two independent reconstructions that must agree:
// version 1 blockwise (B -> 0, A. -> 01, terminal AB -> 010, xx. -> 011,
// terminal xxB -> 0110); version 2 letterwise (prepend 0; A,x -> 1; B,. -> 0).
std::string abdx_to_hat(std::string_view abdx, int version);

std::string convert(std::string_view zt);       // ZT word  -> ABC word
std::string convert_back(std::string_view abc); // ABC word -> ZT word

// The 20 length-3 factors an ABDX word can contain, and the 11 length-2 ones.
const std::set<std::string>& admissible_tribons();
const std::set<std::string>& admissible_doublets();

// Scan the ABDX words of N = 1..maxN (enumerated as ZT words in length-lex
// order, no arithmetic): occurrence counts of every length-3 and length-2
// factor, plus for each tribon the set of hat-word windows it arose from
// (for manual inspection).
struct census_result {
    std::map<std::string, std::uint64_t> tribons;
    std::map<std::string, std::uint64_t> doublets;
    std::map<std::string, std::set<std::string>> contexts;
};

census_result tribon_census(std::uint64_t max_n);

} // namespace tribo
