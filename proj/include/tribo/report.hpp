#pragma once
// Check reports shared by the verify suite and the b-file comparison: one
// record per check with its index range, violation list (capped by the
// producer), and timing. Rendered as one text line per check or as JSON.

#include <string>
#include <vector>

#include "tribo/checked.hpp"

namespace tribo {

struct check_violation {
    std::string input;
    std::string expected;
    std::string actual;
};

struct check_report {
    std::string id;
    i64 from = 0;
    i64 to = -1;                             // inclusive range actually covered
    u64 checked = 0;                         // comparisons performed
    std::vector<check_violation> violations; // first few only
    u64 violation_count = 0;                 // true total
    double elapsed_s = 0.0;

    bool passed() const { return violation_count == 0; }
};

// "id range=[a..b] checked=N violations=V PASS|FAIL (1.23s)"
std::string render_line(const check_report& r);

// Violation detail lines ("  input: expected E, got A"), empty when passing.
std::string render_violations(const check_report& r);

std::string render_json(const std::vector<check_report>& reports);

} // namespace tribo
