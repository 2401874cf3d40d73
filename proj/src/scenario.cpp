#include "conevanish/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace conevanish {

namespace {

const char* kKnownCommands[] = {"gb", "nf", "eliminate", "saturate", "kernel",
                                "hilbert", "betti", "cm", "gorenstein", "cohomology",
                                "segre", "instance", "rees", "fiber-cone", "chart",
                                "verify"};

bool is_command(const std::string& word) {
    for (const char* c : kKnownCommands)
        if (word == c) return true;
    return false;
}

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

Field parse_field_token(const std::string& tok) {
    if (tok == "Q") return Field::rationals();
    if (tok.size() > 1 && tok[0] == 'F') {
        unsigned long p = std::stoul(tok.substr(1));
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw DomainError("bad field '" + tok + "' (expected Q or F<p>)");
}

} // namespace

std::string Invocation::command_string() const {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += " ";
        s += args[i];
    }
    return s;
}

Scenario parse_scenario(const std::string& text, const std::string& fallback_name) {
    Scenario sc;
    sc.name = fallback_name;

    std::istringstream in(text);
    std::string line, decl_buffer;
    std::size_t line_no = 0;
    bool in_ideal = false;
    std::string ideal_acc;
    std::size_t ideal_count = 0;
    std::size_t ring_count = 0;

    auto flush_ideal = [&](std::size_t at_line) {
        if (!in_ideal) return;
        throw ParseError("ideal statement missing terminating ';'", at_line, 1);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (in_ideal) {
            ideal_acc += " " + body;
            if (body.find(';') != std::string::npos) {
                decl_buffer += ideal_acc + "\n";
                ++ideal_count;
                in_ideal = false;
                ideal_acc.clear();
            }
            continue;
        }
        std::vector<std::string> words = split_words(body);
        if (words.empty()) continue;
        const std::string& head = words[0];
        if (head == "ring") {
            decl_buffer += body + "\n";
            ++ring_count;
        } else if (head == "ideal") {
            if (body.find(';') != std::string::npos) {
                decl_buffer += body + "\n";
                ++ideal_count;
            } else {
                in_ideal = true;
                ideal_acc = body;
            }
        } else if (head == "scenario") {
            if (words.size() != 2) throw ParseError("scenario statement wants one name", line_no, 1);
            sc.name = words[1];
        } else if (head == "field") {
            if (words.size() != 2) throw ParseError("field statement wants one value", line_no, 1);
            sc.field = parse_field_token(words[1]);
        } else if (head == "budget-pairs") {
            if (words.size() != 2) throw ParseError("budget-pairs wants one value", line_no, 1);
            sc.budget_pairs = std::stoull(words[1]);
        } else if (is_command(head)) {
            Invocation inv;
            inv.args = words;
            inv.visible_ideals = ideal_count;
            inv.visible_rings = ring_count;
            inv.line = line_no;
            sc.invocations.push_back(std::move(inv));
        } else {
            throw ParseError("unknown statement '" + head + "'", line_no, 1);
        }
    }
    flush_ideal(line_no);
    sc.decls = parse_declarations(decl_buffer);
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scenario '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    return parse_scenario(ss.str(), stem);
}

// ===== command dispatch =====

namespace {

struct Flags {
    std::map<std::string, std::string> values;
    std::vector<std::string> bools;
    std::vector<std::string> positional;

    bool has(const std::string& name) const {
        if (values.count(name)) return true;
        for (const auto& b : bools)
            if (b == name) return true;
        return false;
    }
    std::string get(const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end()) throw DomainError("missing required flag --" + name);
        return it->second;
    }
    std::string get_or(const std::string& name, const std::string& dflt) const {
        auto it = values.find(name);
        return it == values.end() ? dflt : it->second;
    }
};

const std::vector<std::string> kBoolFlags = {"json", "series", "saturate", "direct-gorenstein",
                                             "parallel"};

Flags parse_flags(const std::vector<std::string>& args, std::size_t start) {
    Flags f;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            std::string name = a.substr(2);
            bool boolean = std::find(kBoolFlags.begin(), kBoolFlags.end(), name) != kBoolFlags.end();
            if (boolean) {
                f.bools.push_back(name);
            } else {
                if (i + 1 >= args.size()) throw DomainError("flag --" + name + " wants a value");
                f.values[name] = args[++i];
            }
        } else {
            f.positional.push_back(a);
        }
    }
    return f;
}

struct Env {
    const Declarations* decls;
    std::size_t visible_ideals;
    std::size_t visible_rings;
    const GlobalOptions* gopts;

    const GlobalOptions& g() const { return *gopts; }
};

// ideal-valued flags resolve as declared names inside scenarios and as
// declaration-file paths (optionally "path:NAME") standalone
Ideal resolve_ideal(const Env& env, const std::string& spec) {
    if (env.decls) {
        for (std::size_t k = 0; k < env.visible_ideals && k < env.decls->ideals.size(); ++k) {
            if (env.decls->ideals[k].name == spec) {
                const NamedIdeal& ni = env.decls->ideals[k];
                return Ideal(ni.ring, ni.gens);
            }
        }
    }
    std::string path = spec, name;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        path = spec.substr(0, colon);
        name = spec.substr(colon + 1);
    }
    Declarations d = parse_declarations_file(path);
    if (d.ideals.empty()) throw DomainError("'" + path + "' declares no ideal");
    if (name.empty()) {
        if (d.ideals.size() > 1)
            throw DomainError("'" + path + "' declares several ideals; use path:NAME");
        return Ideal(d.ideals[0].ring, d.ideals[0].gens);
    }
    const NamedIdeal* ni = d.find(name);
    if (!ni) throw DomainError("'" + path + "' has no ideal named '" + name + "'");
    return Ideal(ni->ring, ni->gens);
}

// explicit --in file for operations on one ideal outside scenarios
Env with_input_file(Env env, const Flags& f, Declarations& storage) {
    if (!f.has("in")) return env;
    storage = parse_declarations_file(f.get("in"));
    env.decls = &storage;
    env.visible_ideals = storage.ideals.size();
    env.visible_rings = storage.rings.size();
    return env;
}

nlohmann::json gens_json(const std::vector<Polynomial>& gens) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens) arr.push_back(g.to_string());
    return arr;
}

Field command_field(const Env& env) {
    if (env.g().field) return *env.g().field;
    return Field::rationals();
}

CommandOutcome certificate_outcome(const Certificate& cert) {
    CommandOutcome out;
    out.result = cert.to_json();
    out.status = cert.verdict();
    return out;
}

CommandOutcome cmd_gb(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    const GroebnerResult& r = I.groebner(env.g().gb());
    CommandOutcome out;
    out.result["generators"] = gens_json(r.basis);
    out.result["order"] = I.ring().order().to_string();
    out.result["stats"] = {{"pairs_processed", r.stats.pairs_processed},
                           {"max_degree", r.stats.max_degree}};
    return out;
}

CommandOutcome cmd_nf(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    Polynomial p = parse_polynomial(I.ring(), f.get("poly"));
    CommandOutcome out;
    out.result["normal_form"] = normal_form(p, I, env.g().gb()).to_string();
    return out;
}

CommandOutcome cmd_eliminate(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    std::vector<std::string> keep;
    std::istringstream in(f.get("keep"));
    std::string v;
    while (std::getline(in, v, ',')) keep.push_back(v);
    Ideal e = eliminate(I, keep, env.g().gb());
    CommandOutcome out;
    out.result["ring"] = e.ring().to_string();
    out.result["generators"] = gens_json(e.basis(env.g().gb()));
    return out;
}

CommandOutcome cmd_saturate(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    Ideal J = resolve_ideal(env, f.get("by"));
    Ideal s = saturate(I, J, env.g().gb());
    CommandOutcome out;
    out.result["generators"] = gens_json(s.basis(env.g().gb()));
    return out;
}

CommandOutcome cmd_kernel(const Env& env, const Flags& f) {
    if (!env.decls || env.visible_rings == 0)
        throw DomainError("kernel needs a declared target ring (use --in or a scenario)");
    const PolyRing& target = env.decls->rings[env.visible_rings - 1];
    std::vector<std::string> source_vars;
    {
        std::istringstream in(f.get("source"));
        std::string v;
        while (std::getline(in, v, ',')) source_vars.push_back(v);
    }
    std::vector<Polynomial> images;
    {
        std::istringstream in(f.get("images"));
        std::string expr;
        while (std::getline(in, expr, ',')) images.push_back(parse_polynomial(target, expr));
    }
    if (source_vars.size() != images.size())
        throw DomainError("kernel: --source and --images want matching counts");
    PolyRing source(target.field(), source_vars, MonomialOrder::grevlex());
    Ideal ker = kernel_of_map(RingMap(source, target, images), {}, env.g().gb());
    CommandOutcome out;
    out.result["ring"] = source.to_string();
    out.result["generators"] = gens_json(ker.basis(env.g().gb()));
    return out;
}

CommandOutcome cmd_hilbert(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    CommandOutcome out;
    if (f.has("series") || !f.has("d")) {
        HilbertData hd = hilbert_series(I, env.g().gb());
        out.result["numerator"] = hd.numerator_string();
        out.result["dimension"] = hd.dimension;
        out.result["degree"] = hd.degree.get_str();
    } else {
        long d = std::stol(f.get("d"));
        out.result["d"] = d;
        out.result["value"] = hilbert_function(I, d, env.g().gb()).get_str();
    }
    return out;
}

CommandOutcome cmd_betti(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    Resolution res = free_resolution(I, env.g().gb());
    CommandOutcome out;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, v] : res.betti.beta)
        arr.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
    out.result["betti"] = arr;
    out.result["length"] = res.betti.length;
    out.result["regularity"] = res.betti.regularity();
    return out;
}

CommandOutcome cmd_cm(const Env& env, const Flags& f, bool gorenstein) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    CommandOutcome out;
    out.result["value"] = gorenstein ? is_gorenstein_graded(I, env.g().gb())
                                     : is_cohen_macaulay(I, env.g().gb());
    return out;
}

CommandOutcome cmd_cohomology(const Env& env, const Flags& f) {
    Ideal I = resolve_ideal(env, f.get("ideal"));
    int i = std::stoi(f.get("i"));
    long d = std::stol(f.get("twist"));
    CommandOutcome out;
    out.result["i"] = i;
    out.result["twist"] = d;
    out.result["value"] = sheaf_cohomology_dim(I, i, d, f.has("saturate"), env.g().gb()).get_str();
    return out;
}

CommandOutcome cmd_segre(const Env& env, const Flags& f) {
    unsigned n = static_cast<unsigned>(std::stoul(f.get("n")));
    unsigned m = static_cast<unsigned>(std::stoul(f.get("m")));
    SegreContext ctx = build_segre(n, m, command_field(env));
    CommandOutcome out;
    out.result["ring"] = ctx.ring_z.to_string();
    out.result["minors"] = gens_json(ctx.segre_ideal.gens());
    return out;
}

CommandOutcome cmd_instance(const Env& env, const Flags& f) {
    Ideal iv = resolve_ideal(env, f.get("iv"));
    Ideal iw = resolve_ideal(env, f.get("iw"));
    ProductConeInstance inst = instance_from_factors(iv, iw, env.g().gb());
    CommandOutcome out;
    out.result["ring"] = inst.ctx.ring_z.to_string();
    out.result["iy"] = gens_json(inst.IY.gens());
    out.result["iz"] = gens_json(inst.IZ.gens());
    out.result["vertex_ideal_size"] = inst.m_v.gens().size();
    return out;
}

ReesPresentation rees_from_flags(const Env& env, const Flags& f) {
    Ideal base = resolve_ideal(env, f.get("base"));
    Ideal center = resolve_ideal(env, f.get("center"));
    return rees_presentation(base, center, env.g().gb());
}

CommandOutcome cmd_rees(const Env& env, const Flags& f) {
    ReesPresentation rp = rees_from_flags(env, f);
    CommandOutcome out;
    out.result["ambient"] = rp.ambient.to_string();
    out.result["generators"] = gens_json(rp.rees_ideal.gens());
    out.result["principal_center"] = rp.principal_center;
    out.result["truncated"] = rp.truncated;
    if (rp.truncated) {
        out.result["truncated_at_degree"] = rp.truncated_at_degree;
        out.status = "budget";
    }
    return out;
}

CommandOutcome cmd_fiber_cone(const Env& env, const Flags& f) {
    ReesPresentation rp = rees_from_flags(env, f);
    CommandOutcome out;
    if (rp.truncated) {
        out.status = "budget";
        out.result["truncated"] = true;
        return out;
    }
    Ideal fc = fiber_cone(rp, env.g().gb());
    out.result["ring"] = fc.ring().to_string();
    out.result["generators"] = gens_json(fc.gens());
    out.result["exceptional_locus_empty"] = rp.principal_center;
    if (rp.principal_center)
        out.result["note"] = "principal center: the blow-up is an isomorphism";
    return out;
}

CommandOutcome cmd_chart(const Env& env, const Flags& f) {
    ReesPresentation rp = rees_from_flags(env, f);
    unsigned j = static_cast<unsigned>(std::stoul(f.get("j")));
    Ideal chart = blowup_chart(rp, j);
    CommandOutcome out;
    out.result["ring"] = chart.ring().to_string();
    out.result["generators"] = gens_json(chart.gens());
    return out;
}

CommandOutcome cmd_verify(const Env& env, const std::vector<std::string>& args) {
    if (args.size() < 2)
        throw DomainError("verify wants a claim: prop32 | normality | gorenstein | e1");
    const std::string& claim = args[1];
    Flags f = parse_flags(args, 2);
    VerifyOptions vo;
    vo.gb = env.g().gb();

    if (claim == "prop32") {
        Ideal iv = resolve_ideal(env, f.get("iv"));
        Ideal iw = resolve_ideal(env, f.get("iw"));
        return certificate_outcome(check_exceptional_fiber(
            instance_from_factors(iv, iw, vo.gb), vo));
    }
    if (claim == "normality") {
        Ideal iv = resolve_ideal(env, f.get("iv"));
        Ideal iw = resolve_ideal(env, f.get("iw"));
        unsigned dmax = f.has("dmax") ? static_cast<unsigned>(std::stoul(f.get("dmax")))
                                      : default_normality_dmax(iv, iw);
        return certificate_outcome(check_projective_normality(iv, iw, dmax, vo));
    }
    if (claim == "gorenstein") {
        Ideal iv = resolve_ideal(env, f.get("iv"));
        Ideal iw = resolve_ideal(env, f.get("iw"));
        std::string mode = f.get_or("mode", "hypothesis");
        if (mode != "hypothesis" && mode != "direct")
            throw DomainError("--mode wants hypothesis or direct");
        return certificate_outcome(check_blowup_gorenstein(
            instance_from_factors(iv, iw, vo.gb),
            mode == "direct" ? GorensteinMode::direct : GorensteinMode::hypothesis, vo));
    }
    if (claim == "e1") {
        Ideal ie1, ie2;
        if (f.has("ie1") || f.has("ie2")) {
            ie1 = resolve_ideal(env, f.get("ie1"));
            ie2 = resolve_ideal(env, f.get("ie2"));
        } else {
            // built-in Fermat cubics; heavy pipeline defaults to F31
            Field fld = env.g().field ? *env.g().field : Field::prime(31);
            PolyRing rx(fld, {"x0", "x1", "x2"}, MonomialOrder::grevlex());
            PolyRing ry(fld, {"y0", "y1", "y2"}, MonomialOrder::grevlex());
            ie1 = Ideal(rx, {parse_polynomial(rx, "x0^3 + x1^3 + x2^3")});
            ie2 = Ideal(ry, {parse_polynomial(ry, "y0^3 + y1^3 + y2^3")});
        }
        E1Options eo;
        eo.verify = vo;
        eo.direct_gorenstein = f.has("direct-gorenstein");
        eo.direct_budget = vo.gb;
        return certificate_outcome(verify_example_e1(ie1, ie2, eo));
    }
    throw DomainError("unknown verify claim '" + claim + "'");
}

} // namespace

CommandOutcome run_command(const std::vector<std::string>& args, const Declarations* decls,
                           std::size_t visible_ideals, std::size_t visible_rings,
                           const GlobalOptions& g) {
    if (args.empty()) throw DomainError("empty command");
    Env env{decls, visible_ideals, visible_rings, &g};
    Declarations storage;
    const std::string& cmd = args[0];
    Flags f = parse_flags(args, 1);
    if (cmd != "verify") env = with_input_file(env, f, storage);

    try {
        if (cmd == "gb") return cmd_gb(env, f);
        if (cmd == "nf") return cmd_nf(env, f);
        if (cmd == "eliminate") return cmd_eliminate(env, f);
        if (cmd == "saturate") return cmd_saturate(env, f);
        if (cmd == "kernel") return cmd_kernel(env, f);
        if (cmd == "hilbert") return cmd_hilbert(env, f);
        if (cmd == "betti") return cmd_betti(env, f);
        if (cmd == "cm") return cmd_cm(env, f, false);
        if (cmd == "gorenstein") return cmd_cm(env, f, true);
        if (cmd == "cohomology") return cmd_cohomology(env, f);
        if (cmd == "segre") return cmd_segre(env, f);
        if (cmd == "instance") return cmd_instance(env, f);
        if (cmd == "rees") return cmd_rees(env, f);
        if (cmd == "fiber-cone") return cmd_fiber_cone(env, f);
        if (cmd == "chart") return cmd_chart(env, f);
        if (cmd == "verify") return cmd_verify(env, args);
    } catch (const BudgetExceededError& e) {
        CommandOutcome out;
        out.status = "budget";
        out.error = e.what();
        return out;
    }
    throw DomainError("unknown subcommand '" + cmd + "'");
}

Report run_scenario(const Scenario& s, const GlobalOptions& g) {
    GlobalOptions eff = g;
    if (!eff.field && s.field) eff.field = s.field;
    if (s.budget_pairs) eff.budget_pairs = *s.budget_pairs;

    std::vector<CommandOutcome> outcomes(s.invocations.size());
    std::vector<std::string> errors(s.invocations.size());

    auto run_one = [&](std::size_t k) {
        const Invocation& inv = s.invocations[k];
        try {
            outcomes[k] = run_command(inv.args, &s.decls, inv.visible_ideals, inv.visible_rings, eff);
        } catch (const BudgetExceededError& e) {
            outcomes[k].status = "budget";
            outcomes[k].error = e.what();
        } catch (const std::exception& e) {
            outcomes[k].status = "error";
            outcomes[k].error = e.what();
        }
    };

    if (eff.parallel && s.invocations.size() > 1) {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < s.invocations.size(); ++k)
            pool.emplace_back(run_one, k);
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t k = 0; k < s.invocations.size(); ++k) run_one(k);
    }

    Report r;
    r.body["scenario"] = s.name;
    r.body["versions"] = {{"artifact", kArtifactVersion}, {"grammar", kGrammarVersion}};
    nlohmann::json invs = nlohmann::json::array();
    bool any_failure = false, any_budget = false;
    for (std::size_t k = 0; k < s.invocations.size(); ++k) {
        nlohmann::json ij;
        ij["command"] = s.invocations[k].command_string();
        ij["status"] = outcomes[k].status;
        ij["result"] = outcomes[k].result;
        if (!outcomes[k].error.empty()) ij["error"] = outcomes[k].error;
        invs.push_back(ij);
        if (outcomes[k].counts_as_failure()) any_failure = true;
        if (outcomes[k].status == "budget") any_budget = true;
    }
    r.body["invocations"] = invs;
    r.exit_code = any_failure ? 1 : (any_budget ? 3 : 0);
    return r;
}

std::string emit_report(const Report& r, bool json_format) {
    if (json_format) return r.body.dump(2) + "\n";
    std::ostringstream out;
    out << "scenario: " << r.body["scenario"].get<std::string>() << "\n";
    for (const auto& inv : r.body["invocations"]) {
        std::string status = inv["status"].get<std::string>();
        std::string upper = status;
        for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out << upper << "  " << inv["command"].get<std::string>() << "\n";
        if (inv.contains("error")) out << "      " << inv["error"].get<std::string>() << "\n";
        const auto& res = inv["result"];
        if (res.contains("checks")) {
            for (const auto& c : res["checks"]) {
                std::string cs = c["status"].get<std::string>();
                for (auto& ch : cs) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                out << "      " << cs << "  " << c["name"].get<std::string>() << "\n";
            }
        }
    }
    out << "exit: " << r.exit_code << "\n";
    return out.str();
}

} // namespace conevanish
