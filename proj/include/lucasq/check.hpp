#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lucasq {

// One verified fact. `anchor` states the fact itself (an identity, a
// congruence, a point membership) so a report is readable on its own.
struct CheckItem {
    std::string name;    // stable id, e.g. "quartic.two-factorization"
    std::string anchor;  // what is being checked, stated algebraically
    bool pass = false;
    std::string detail;
};

using CheckReport = std::vector<CheckItem>;

inline CheckItem make_check(std::string name, std::string anchor, bool pass,
                            std::string detail = "") {
    return CheckItem{std::move(name), std::move(anchor), pass, std::move(detail)};
}

inline bool all_pass(const CheckReport& report) {
    for (const auto& item : report)
        if (!item.pass)
            return false;
    return true;
}

inline void append(CheckReport& dst, CheckReport src) {
    for (auto& item : src)
        dst.push_back(std::move(item));
}

}  // namespace lucasq
