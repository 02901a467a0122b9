#pragma once
// Comparison of library-generated sequences against OEIS b-files. Each
// binding names an OEIS id, the local generator, and the exact index/value
// shifts between the local convention (0-offset positions, etc.) and the
// published sequence: local(n) == bfile(n + index_shift) + value_shift.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tribo/checked.hpp"
#include "tribo/report.hpp"

namespace tribo {

// A parsed b-file: values at the contiguous index range [first, first+size).
struct bfile {
    i64 first = 0;
    std::vector<i64> values;

    bool covers(i64 idx) const {
        return idx >= first && idx < first + static_cast<i64>(values.size());
    }
    i64 value(i64 idx) const { return values[static_cast<std::size_t>(idx - first)]; }
    i64 last() const { return first + static_cast<i64>(values.size()) - 1; }
};

// Lines "index value"; '#' comments and blank lines are skipped; CR tolerated.
// Malformed lines and index gaps throw parse_error carrying the line number.
bfile parse_bfile(std::istream& in);
bfile load_bfile(const std::string& path); // throws error if unreadable

struct sequence_binding {
    std::string id;          // "A278040"
    std::string description;
    i64 first_local;         // smallest index n the generator accepts
    i64 index_shift;         // bfile index = n + index_shift
    i64 value_shift;         // local(n) = bfile value + value_shift
    std::function<i64(i64)> local;
};

// All supported sequences. Stable order (by id).
const std::vector<sequence_binding>& bindings();

// Lookup by id; accepts the canonical "A000000" form. Throws domain_error
// for ids not in the table.
const sequence_binding& binding_for(const std::string& id);

// Compare generator against file. With limit = 0, compares every shared
// index; otherwise exactly `limit` terms starting at first_local, and a
// b-file covering fewer terms is an error (a comparison that silently
// checked less than asked would be worthless). A generator that runs out
// of 64-bit range ends the shared window instead.
check_report compare(const sequence_binding& b, const bfile& f, u64 limit);

// "b278040.txt" inside dir.
std::string fixture_path(const std::string& id, const std::string& dir);

// $TRIBO_DATA_DIR if set, else the compiled-in default (repo data/).
std::string data_dir();

} // namespace tribo
