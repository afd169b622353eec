#pragma once

#include <string>
#include <vector>

namespace kz {

enum class CheckStatus { pass, fail, skipped };

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // serialized counterexample or note, optional
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckEntry> entries;

    void add(std::string name, bool ok, std::string witness = "", double seconds = 0.0) {
        entries.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                           std::move(witness), seconds});
    }
    void add_skipped(std::string name, std::string why) {
        entries.push_back({std::move(name), CheckStatus::skipped, std::move(why), 0.0});
    }
    void merge(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) ++n;
        return n;
    }
};

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

} // namespace kz
