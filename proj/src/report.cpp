#include "confrep/report.hpp"

#include <algorithm>

namespace confrep {

void Report::add(std::string identity, bool pass, std::string lhs, std::string rhs, std::string diff) {
    if (diff.empty()) diff = pass ? "0" : "";
    entries.push_back({std::move(identity), pass, std::move(lhs), std::move(rhs), std::move(diff)});
}

void Report::merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.pass; }));
}

std::vector<std::string> Report::failed() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (!e.pass) out.push_back(e.identity);
    return out;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : r.entries)
        checks.push_back({{"identity", e.identity},
                          {"status", e.pass ? "pass" : "fail"},
                          {"lhs", e.lhs},
                          {"rhs", e.rhs},
                          {"diff", e.diff}});
    return {{"name", r.name}, {"checks", static_cast<long>(r.entries.size())},
            {"failures", static_cast<long>(r.failures())}, {"entries", checks}};
}

}  // namespace confrep
