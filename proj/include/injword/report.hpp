#pragma once

#include <string>
#include <utility>
#include <vector>

namespace injword {

/// Outcome of a verification routine: overall verdict, failed checks, and
/// named values worth printing either way.
struct Report {
    explicit Report(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> facts;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
    void note(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
    void absorb(const Report& other) {
        for (const auto& f : other.failures) check(false, other.name + ": " + f);
        if (!other.passed && other.failures.empty()) check(false, other.name);
    }
};

}  // namespace injword
