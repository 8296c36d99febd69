#pragma once

/// Tiny pass/fail report used by the self-verification entry points.

#include <string>
#include <vector>

namespace k3fib {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;  // offending class / computed value on failure
};

struct CheckReport {
    std::string title;
    std::vector<CheckLine> lines;

    void add(std::string name, bool ok, std::string detail = "") {
        lines.push_back({std::move(name), ok, std::move(detail)});
    }
    bool all_ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};

}  // namespace k3fib
