#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace prym {

// Uniform shape for verifier output. Items are either data rows or checks
// (rows with an ok flag). `applicable` is false when the claim's hypotheses
// fail: the report then carries no verdict.
struct Report {
    struct Item {
        std::string key;
        std::string label;
        std::string value;
        std::optional<bool> ok;
    };

    std::string title;
    bool applicable = true;
    std::vector<Item> items;
    std::string note;

    void add(const std::string& key, const std::string& label, const std::string& value);
    void check(const std::string& key, const std::string& label, const std::string& value, bool ok);
    void fail_hypothesis(const std::string& key, const std::string& label, const std::string& value);

    bool verdict() const; // all checks ok; meaningful only when applicable
    const Item* find(const std::string& key) const;

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

} // namespace prym
