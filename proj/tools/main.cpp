#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "conevanish/scenario.hpp"

using namespace conevanish;

namespace {

void write_output(const std::string& bytes, const GlobalOptions& g) {
    if (!g.out_path.empty()) {
        std::ofstream out(g.out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + g.out_path + "'");
        out << bytes;
    } else {
        std::cout << bytes;
    }
}

std::string render_single(const CommandOutcome& outcome, bool json) {
    if (json) return outcome.result.dump(2) + "\n";
    std::ostringstream out;
    if (outcome.result.contains("checks")) {
        // certificate: compact text summary
        out << "claim " << outcome.result["claim_id"].get<std::string>()
            << " [" << outcome.result["field"].get<std::string>()
            << "] verdict: " << outcome.result["verdict"].get<std::string>() << "\n";
        for (const auto& c : outcome.result["checks"]) {
            std::string cs = c["status"].get<std::string>();
            for (auto& ch : cs) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            out << "  " << cs << "  " << c["name"].get<std::string>() << "\n";
        }
        for (const auto& a : outcome.result["assumptions_unverified"])
            out << "  unverified: " << a.get<std::string>() << "\n";
    } else {
        for (const auto& [key, value] : outcome.result.items())
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    if (!outcome.error.empty()) out << "error: " << outcome.error << "\n";
    return out.str();
}

int status_to_exit(const std::string& status) {
    if (status == "ok" || status == "pass") return 0;
    if (status == "budget") return 3;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cone/blow-up construction and verification engine"};
    app.prefix_command(); // global flags first, then the subcommand words

    GlobalOptions g;
    std::string field_name;
    app.add_option("--field", field_name, "coefficient field: Q or F<p>");
    app.add_option("--budget-pairs", g.budget_pairs, "Groebner pair budget");
    app.add_flag("--json", g.json, "emit canonical JSON");
    app.add_option("--out", g.out_path, "write the report to a file");
    app.add_flag("--parallel", g.parallel, "run independent scenario invocations concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    }

    std::vector<std::string> rest = app.remaining();
    try {
        if (!field_name.empty()) {
            if (field_name == "Q") {
                g.field = Field::rationals();
            } else if (field_name.size() > 1 && field_name[0] == 'F') {
                g.field = Field::prime(static_cast<std::uint32_t>(std::stoul(field_name.substr(1))));
            } else {
                throw DomainError("bad --field '" + field_name + "' (expected Q or F<p>)");
            }
        }
        if (rest.empty()) {
            std::cerr << app.help();
            return 2;
        }
        if (rest[0] == "run") {
            if (rest.size() != 2) throw DomainError("usage: conevanish run <scenario-file>");
            Scenario sc = parse_scenario_file(rest[1]);
            Report rep = run_scenario(sc, g);
            write_output(emit_report(rep, g.json), g);
            return rep.exit_code;
        }
        CommandOutcome outcome = run_command(rest, nullptr, 0, 0, g);
        write_output(render_single(outcome, g.json), g);
        return status_to_exit(outcome.status);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
