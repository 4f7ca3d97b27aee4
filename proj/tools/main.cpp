// Command-line front end: evaluate members, generate families, run box
// searches, and run the verification suites. Exit codes: 0 success / all
// checks pass, 1 at least one check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lucasq/bivar_poly.hpp"
#include "lucasq/descent.hpp"
#include "lucasq/families.hpp"
#include "lucasq/fields.hpp"
#include "lucasq/lucas.hpp"
#include "lucasq/report.hpp"
#include "lucasq/search.hpp"

namespace {

using namespace lucasq;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

mpz_class parse_bigint(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("expected an integer, got '" + text + "'");
    }
}

int emit(const Report& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        rep.print_text(std::cout);
    return rep.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

CheckReport factorization_report() {
    CheckReport rep;
    for (int n : {4, 5, 6, 7, 8, 10, 11})
        rep.push_back(make_check(
            "poly.u" + std::to_string(n) + "-factorization",
            "tabulated product for U_" + std::to_string(n) +
                " matches the recurrence polynomial coefficient by coefficient",
            verify_factorization(n)));
    return rep;
}

int cmd_u(unsigned long n, const std::string& p_text, const std::string& q_text,
          bool json) {
    const mpz_class p = parse_bigint(p_text);
    const mpz_class q = parse_bigint(q_text);
    if (p == 0 || q == 0)
        throw CLI::ValidationError("P and Q must be non-zero");

    const LucasParams params(p, q);
    const mpz_class value = lucas_u(n, params);
    const auto root = is_perfect_square(value);

    Report rep;
    rep.command = "u";
    rep.parameters = {{"n", std::to_string(n)}, {"p", p.get_str()}, {"q", q.get_str()}};
    if (root)
        rep.solutions.push_back(
            SolutionRecord{n, p, q, value, *root, is_degenerate(params)});
    rep.stats = {{"value", value.get_str()},
                 {"is_square", root ? "true" : "false"},
                 {"degeneracy", degeneracy_name(classify_degenerate(params))}};
    if (root)
        rep.stats.emplace_back("root", root->get_str());
    return emit(rep, json);
}

int cmd_family(int n, int count, long bound, bool json) {
    const auto records = generate_family(FamilyRequest{n, count, bound});

    Report rep;
    rep.command = "family";
    rep.parameters = {{"n", std::to_string(n)},
                      {"count", std::to_string(count)},
                      {"bound", std::to_string(bound)}};
    rep.solutions = records;
    rep.stats = {{"requested", std::to_string(count)},
                 {"emitted", std::to_string(records.size())}};
    if (static_cast<int>(records.size()) < count)
        rep.stats.emplace_back("note", "enumeration exhausted; raise --bound");
    return emit(rep, json);
}

int cmd_search(const SearchSpec& spec, bool json) {
    const SearchResult res = run_search(spec);

    Report rep;
    rep.command = "search";
    rep.parameters = {{"n_min", std::to_string(spec.n_min)},
                      {"n_max", std::to_string(spec.n_max)},
                      {"p_max", std::to_string(spec.p_max)},
                      {"q_max", std::to_string(spec.q_max)},
                      {"jobs", std::to_string(spec.workers)}};
    rep.solutions = res.hits;
    rep.stats = {{"pairs_scanned", std::to_string(res.stats.pairs_scanned)},
                 {"degenerate_skipped", std::to_string(res.stats.degenerate_skipped)},
                 {"negative_skipped", std::to_string(res.stats.negative_skipped)},
                 {"sieve_rejected", std::to_string(res.stats.sieve_rejected)},
                 {"exact_tests", std::to_string(res.stats.exact_tests)},
                 {"hits", std::to_string(res.hits.size())}};
    return emit(rep, json);
}

int cmd_verify(const std::string& suite, long quartic_bound, bool json) {
    CheckReport checks;
    if (suite == "identities" || suite == "all") {
        append(checks, factorization_report());
        append(checks, verify_k_factorizations());
    }
    if (suite == "numberfields" || suite == "all") {
        append(checks, verify_constant_registry(FieldId::Quartic));
        append(checks, verify_constant_registry(FieldId::Golden));
        append(checks, verify_constant_registry(FieldId::Quintic));
    }
    if (suite == "descent" || suite == "all") {
        append(checks, mod4_elimination_u8());
        append(checks, quartic_scan_report(quartic_bound));
        append(checks, mod121_u11());
        append(checks, exponent_case_report());
    }
    if (suite == "points" || suite == "all") {
        append(checks, verify_cited_points());
        append(checks, verify_genus2_point());
    }

    Report rep;
    rep.command = "verify";
    rep.parameters = {{"suite", suite},
                      {"quartic_bound", std::to_string(quartic_bound)}};
    rep.checks = std::move(checks);
    return emit(rep, json);
}

int default_jobs() {
    if (const char* env = std::getenv("LUCAS_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<int>(v);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lucas sequences U_n(P,Q) with square terms: families, box "
                 "search, and verification suites"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON report on stdout");

    auto* u_cmd = app.add_subcommand("u", "evaluate U_n(P,Q) and test squareness");
    u_cmd->fallthrough();
    unsigned long u_n = 0;
    std::string u_p, u_q;
    u_cmd->add_option("--n", u_n, "index n >= 0")->required();
    u_cmd->add_option("--p", u_p, "parameter P (non-zero integer)")->required();
    u_cmd->add_option("--q", u_q, "parameter Q (non-zero integer)")->required();

    auto* family_cmd =
        app.add_subcommand("family", "emit verified members of the U_n family");
    family_cmd->fallthrough();
    int f_n = 7;
    int f_count = 5;
    long f_bound = 100;
    family_cmd->add_option("--n", f_n, "family index, 2..7")
        ->required()
        ->check(CLI::Range(2, 7));
    family_cmd->add_option("--count", f_count, "records to emit")
        ->check(CLI::PositiveNumber);
    family_cmd->add_option("--bound", f_bound, "parameter box for (a,b) enumeration")
        ->check(CLI::PositiveNumber);

    auto* search_cmd =
        app.add_subcommand("search", "exhaustive coprime box search for squares");
    search_cmd->fallthrough();
    SearchSpec spec;
    int jobs = 0;
    search_cmd->add_option("--n-min", spec.n_min, "lowest index")->check(CLI::Range(2, 16));
    search_cmd->add_option("--n-max", spec.n_max, "highest index")->check(CLI::Range(2, 16));
    search_cmd->add_option("--pmax", spec.p_max, "P ranges over 1..pmax")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--qmax", spec.q_max, "Q ranges over -qmax..qmax, Q != 0")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--jobs", jobs, "worker threads (default: LUCAS_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    long quartic_bound = 1000;
    verify_cmd->add_option("--suite", suite, "all|identities|numberfields|descent|points")
        ->check(CLI::IsMember({"all", "identities", "numberfields", "descent", "points"}));
    verify_cmd->add_option("--quartic-bound", quartic_bound,
                           "scan bound for the quartic equations")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);

        if (u_cmd->parsed())
            return cmd_u(u_n, u_p, u_q, json);
        if (family_cmd->parsed())
            return cmd_family(f_n, f_count, f_bound, json);
        if (search_cmd->parsed()) {
            spec.workers = jobs >= 1 ? jobs : default_jobs();
            if (spec.n_min > spec.n_max)
                throw CLI::ValidationError("--n-min must not exceed --n-max");
            return cmd_search(spec, json);
        }
        if (verify_cmd->parsed())
            return cmd_verify(suite, quartic_bound, json);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
