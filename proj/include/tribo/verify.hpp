#pragma once
// Batch verification engine. Every identity, codec property, and transform
// invariant the library exposes is registered here as a named check that
// sweeps an index range and reports mismatches. Checks are independent and
// can run on a small thread pool; reports always come back in catalog order,
// so identical (selection, limit) inputs give identical output.

#include <string>
#include <vector>

#include "tribo/checked.hpp"
#include "tribo/report.hpp"

namespace tribo {

struct check_info {
    std::string id;
    std::string description;
};

// All registered checks, in the order reports are returned.
const std::vector<check_info>& check_catalog();

// Run the selected checks (empty selection = all). `limit` scales each
// check's sweep; checks with structurally fixed ranges (word enumerations,
// table recursions) clamp it. Unknown ids throw domain_error. `jobs` = 0
// means one worker per hardware thread. Each report keeps at most
// `violation_cap` sample violations but counts all of them.
std::vector<check_report> run_checks(const std::vector<std::string>& selection,
                                     u64 limit,
                                     unsigned jobs = 0,
                                     u64 violation_cap = 10);

} // namespace tribo
