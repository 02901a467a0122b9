#include "tribo/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace tribo {

std::string render_line(const check_report& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", r.elapsed_s);
    std::ostringstream os;
    os << r.id << " range=[" << r.from << ".." << r.to << "] checked=" << r.checked
       << " violations=" << r.violation_count << ' ' << (r.passed() ? "PASS" : "FAIL")
       << " (" << buf << ")";
    return os.str();
}

std::string render_violations(const check_report& r) {
    std::ostringstream os;
    for (const auto& v : r.violations)
        os << "  " << v.input << ": expected " << v.expected << ", got " << v.actual << '\n';
    if (r.violation_count > r.violations.size())
        os << "  ... and " << (r.violation_count - r.violations.size()) << " more\n";
    return os.str();
}

std::string render_json(const std::vector<check_report>& reports) {
    nlohmann::json checks = nlohmann::json::array();
    u64 total = 0;
    bool all_pass = true;
    for (const auto& r : reports) {
        nlohmann::json viols = nlohmann::json::array();
        for (const auto& v : r.violations)
            viols.push_back({{"input", v.input}, {"expected", v.expected}, {"actual", v.actual}});
        checks.push_back({{"id", r.id},
                          {"from", r.from},
                          {"to", r.to},
                          {"checked", r.checked},
                          {"violations", viols},
                          {"violation_count", r.violation_count},
                          {"elapsed_s", r.elapsed_s},
                          {"passed", r.passed()}});
        total += r.violation_count;
        all_pass = all_pass && r.passed();
    }
    nlohmann::json doc = {
        {"checks", checks}, {"total_violations", total}, {"passed", all_pass}};
    return doc.dump(2);
}

} // namespace tribo
