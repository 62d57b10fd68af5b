#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace confrep {

/// One checked identity.
struct CheckEntry {
    std::string identity;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string diff;  // "0" when the identity holds
};

/// A named list of checks.
struct Report {
    std::string name;
    std::vector<CheckEntry> entries;

    void add(std::string identity, bool pass, std::string lhs = {}, std::string rhs = {}, std::string diff = {});
    void merge(const Report& other);
    bool all_pass() const;
    std::size_t failures() const;
    /// Identities of failed entries.
    std::vector<std::string> failed() const;
};

nlohmann::json to_json(const Report& r);

}  // namespace confrep
