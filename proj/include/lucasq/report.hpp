#pragma once

// Machine-readable run reports. One schema for every subcommand: command,
// parameters, solutions, checks, stats. All big integers are serialized as
// decimal strings so arbitrary precision survives any consumer.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lucasq/check.hpp"
#include "lucasq/lucas.hpp"

namespace lucasq {

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<SolutionRecord> solutions;
    CheckReport checks;
    std::vector<std::pair<std::string, std::string>> stats;

    bool all_checks_pass() const { return all_pass(checks); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["parameters"] = nlohmann::json::object();
        for (const auto& [k, v] : parameters)
            j["parameters"][k] = v;
        j["solutions"] = nlohmann::json::array();
        for (const auto& r : solutions) {
            j["solutions"].push_back({{"n", r.n},
                                      {"p", r.p.get_str()},
                                      {"q", r.q.get_str()},
                                      {"value", r.value.get_str()},
                                      {"root", r.root.get_str()},
                                      {"degenerate", r.degenerate}});
        }
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"anchor", c.anchor},
                                   {"status", c.pass ? "pass" : "fail"},
                                   {"detail", c.detail}});
        }
        j["stats"] = nlohmann::json::object();
        for (const auto& [k, v] : stats)
            j["stats"][k] = v;
        return j;
    }

    void print_text(std::ostream& os) const {
        os << "command: " << command << "\n";
        for (const auto& [k, v] : parameters)
            os << "  " << k << " = " << v << "\n";
        if (!solutions.empty()) {
            os << "solutions (" << solutions.size() << "):\n";
            for (const auto& r : solutions) {
                os << "  U_" << r.n << "(" << r.p << ", " << r.q << ") = " << r.value
                   << " = " << r.root << "^2";
                if (r.degenerate)
                    os << "  [degenerate]";
                os << "\n";
            }
        }
        if (!checks.empty()) {
            int passed = 0;
            for (const auto& c : checks) {
                os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": "
                   << c.anchor;
                if (!c.detail.empty())
                    os << "  (" << c.detail << ")";
                os << "\n";
                passed += c.pass;
            }
            os << "checks: " << passed << "/" << checks.size() << " passed\n";
        }
        for (const auto& [k, v] : stats)
            os << "  " << k << ": " << v << "\n";
    }
};

}  // namespace lucasq
