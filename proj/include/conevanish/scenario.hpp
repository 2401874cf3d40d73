#ifndef CONEVANISH_SCENARIO_HPP
#define CONEVANISH_SCENARIO_HPP

#include <optional>

#include "conevanish/parse.hpp"
#include "conevanish/verifiers.hpp"

namespace conevanish {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kGrammarVersion = "1";

// Execution defaults shared by the CLI and scenario runner.
struct GlobalOptions {
    std::uint64_t budget_pairs = 1'000'000;
    std::optional<Field> field; // explicit --field, if any
    bool json = false;
    std::string out_path;
    bool parallel = false;

    GroebnerOptions gb() const {
        GroebnerOptions o;
        o.pair_budget = budget_pairs;
        return o;
    }
};

// One subcommand invocation, already split into words.
struct Invocation {
    std::vector<std::string> args;
    std::size_t visible_ideals = 0; // declarations before this line only
    std::size_t visible_rings = 0;
    std::size_t line = 0;

    std::string command_string() const;
};

// Scenario file: declarations (algebra-core grammar) interleaved with
// invocation lines; `scenario NAME`, `field F`, `budget-pairs N` metadata.
struct Scenario {
    std::string name;
    Declarations decls;
    std::vector<Invocation> invocations;
    std::optional<Field> field;
    std::optional<std::uint64_t> budget_pairs;
};

Scenario parse_scenario(const std::string& text, const std::string& fallback_name);
Scenario parse_scenario_file(const std::string& path);

struct CommandOutcome {
    nlohmann::json result;
    // ok | pass | fail | inconclusive | error | budget
    std::string status = "ok";
    std::string error;

    bool counts_as_failure() const {
        return status == "fail" || status == "inconclusive" || status == "error";
    }
};

// Dispatch one subcommand. `decls` supplies named ideals when running inside
// a scenario; standalone invocations resolve ideal-valued flags as
// declaration files instead. Usage problems throw ParseError/[Domain]Error.
CommandOutcome run_command(const std::vector<std::string>& args, const Declarations* decls,
                           std::size_t visible_ideals, std::size_t visible_rings,
                           const GlobalOptions& g);

struct Report {
    nlohmann::json body;
    int exit_code = 0;
};

Report run_scenario(const Scenario& s, const GlobalOptions& g);

// canonical bytes: stable-key JSON or a human-readable summary table
std::string emit_report(const Report& r, bool json_format);

} // namespace conevanish

#endif
