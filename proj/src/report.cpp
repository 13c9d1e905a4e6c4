#include "prym/report.hpp"

#include <sstream>

namespace prym {

void Report::add(const std::string& key, const std::string& label, const std::string& value) {
    items.push_back({key, label, value, std::nullopt});
}

void Report::check(const std::string& key, const std::string& label, const std::string& value,
                   bool ok) {
    items.push_back({key, label, value, ok});
}

void Report::fail_hypothesis(const std::string& key, const std::string& label,
                             const std::string& value) {
    applicable = false;
    items.push_back({key, label, value, std::nullopt});
    if (note.empty()) note = "hypotheses not met";
}

bool Report::verdict() const {
    for (const auto& it : items)
        if (it.ok && !*it.ok) return false;
    return true;
}

const Report::Item* Report::find(const std::string& key) const {
    for (const auto& it : items)
        if (it.key == key) return &it;
    return nullptr;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& it : items) {
        os << "  [" << it.key << "] " << it.label << ": " << it.value;
        if (it.ok) os << (*it.ok ? "  (ok)" : "  (FAIL)");
        os << "\n";
    }
    if (!note.empty()) os << "  note: " << note << "\n";
    if (!applicable)
        os << "  verdict: not applicable\n";
    else
        os << "  verdict: " << (verdict() ? "pass" : "fail") << "\n";
    return os.str();
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["applicable"] = applicable;
    if (applicable) j["verdict"] = verdict() ? "pass" : "fail";
    if (!note.empty()) j["note"] = note;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json e;
        e["key"] = it.key;
        e["label"] = it.label;
        e["value"] = it.value;
        if (it.ok) e["ok"] = *it.ok;
        arr.push_back(e);
    }
    j["items"] = arr;
    return j;
}

} // namespace prym
