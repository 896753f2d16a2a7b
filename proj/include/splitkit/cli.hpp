#pragma once

#include "splitkit/splitkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace splitkit::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

/// Accumulates the text rendering and the JSON rendering of the same
/// fields, so the two output modes cannot drift apart.
struct Output {
    std::ostringstream text;
    nlohmann::json json = nlohmann::json::object();

    void kv(const std::string& key, const std::string& value) {
        text << key << "=" << value << "\n";
        json[key] = value;
    }
    void kv(const std::string& key, long long value) {
        text << key << "=" << value << "\n";
        json[key] = value;
    }
    void kv(const std::string& key, bool value) {
        text << key << "=" << (value ? "true" : "false") << "\n";
        json[key] = value;
    }
    void kv_json(const std::string& key, const nlohmann::json& value) {
        text << key << "=" << value.dump() << "\n";
        json[key] = value;
    }
};

struct InputSpec {
    std::string file;
    std::string catalog_name;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedInput {
    Diagram diagram;
    std::string catalog_name;  // empty unless --catalog
};

inline LoadedInput load_input(const InputSpec& spec, const std::string& stdin_text) {
    if (!spec.catalog_name.empty())
        return {catalog(spec.catalog_name), spec.catalog_name};
    std::string content =
        spec.file.empty() || spec.file == "-" ? stdin_text : read_file(spec.file);
    auto lines = pd_lines(content);
    if (lines.empty())
        throw ParseError(0, "no PD expression in input");
    return {parse_pd(lines.front()), ""};
}

inline nlohmann::json matrix_json(const LinkingMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.entries) rows.push_back(row);
    return rows;
}

inline void emit_invariants(Output& o, const Diagram& d,
                            const std::string& catalog_name) {
    if (!catalog_name.empty()) o.kv("name", catalog_name);
    o.kv("components", static_cast<long long>(d.component_count()));
    o.kv("free_loops", static_cast<long long>(d.free_loops()));
    o.kv("crossings", render_pd(d.pd()));
    nlohmann::json signs = nlohmann::json::array();
    for (int c = 0; c < d.crossing_count(); ++c) signs.push_back(d.sign(c));
    o.kv_json("signs", signs);
    o.kv("conway", conway(d).to_string('z'));
    o.kv("alexander", alexander(d).to_string('t'));
    LinkingMatrix m = linking_matrix(d);
    o.kv_json("linking_matrix", matrix_json(m));
    o.kv("lasso_budget", static_cast<long long>(m.lasso_budget()));
    o.kv("ld", static_cast<long long>(warp_linking_degree(d)));
    if (!catalog_name.empty()) {
        const CatalogEntry& entry = catalog_entry(catalog_name);
        if (!entry.note.empty()) o.kv("note", entry.note);
    }
}

struct Suite {
    std::string name;
    int cases = 0;
    int failures = 0;
};

inline Suite run_catalog_suite() {
    Suite s{"catalog-self-check"};
    for (const CatalogEntry& e : catalog_entries()) {
        ++s.cases;
        try {
            Diagram d = parse_pd(e.pd);
            if (d.component_count() != e.components) { ++s.failures; continue; }
            if (!(conway(d) == parse_poly(e.conway, 'z'))) { ++s.failures; continue; }
            if (linking_matrix(d).entries != e.linking) ++s.failures;
        } catch (const std::exception&) {
            ++s.failures;
        }
    }
    return s;
}

inline Suite run_z3_suite() {
    Suite s{"z3-lemma-grid"};
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        if (d.crossing_count() > 9) continue;
        LaurentPoly base = conway(d);
        for (int c = 0; c < d.crossing_count(); ++c) {
            ++s.cases;
            LaurentPoly got = conway(lasso(d, c).diagram);
            bool ok = base.is_zero()
                          ? got.is_zero()
                          : (got == scale_by_monomial(base, 1, 3) ||
                             got == scale_by_monomial(base, -1, 3));
            if (!ok) ++s.failures;
        }
    }
    return s;
}

inline Suite run_linking_neutrality_suite() {
    Suite s{"linking-neutrality"};
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        if (d.crossing_count() > 9) continue;
        for (int c = 0; c < d.crossing_count(); ++c) {
            ++s.cases;
            LassoResult res = lasso(d, c);
            LinkingMatrix m = linking_matrix(res.diagram);
            for (int j = 0; j < m.size(); ++j)
                if (m.entries[res.created_component][j] != 0) {
                    ++s.failures;
                    break;
                }
        }
    }
    return s;
}

inline Suite run_sandwich_suite() {
    Suite s{"sandwich"};
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        ++s.cases;
        int lower = split_lower(d).value;
        int upper = split_diagram_upper(d, 3).value;
        int ld = warp_linking_degree(d);
        if (!(lower <= upper && upper <= ld)) ++s.failures;
    }
    return s;
}

}  // namespace detail

/// Runs the command line given argv-style arguments (program name omitted).
/// stdin_text stands in for standard input so the function stays pure.
inline RunResult run(const std::vector<std::string>& args,
                     const std::string& stdin_text = "") {
    RunResult result;
    CLI::App app{"link-diagram toolkit: invariants, lassoing moves, and "
                 "complete-splitting bounds"};
    app.require_subcommand(1);

    detail::InputSpec input;
    std::string log_path;
    int budget = 3;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_flag("--json", as_json, "machine-readable output");
        if (with_input) {
            cmd->add_option("--input", input.file,
                            "PD file ('-' for standard input)");
            cmd->add_option("--catalog", input.catalog_name,
                            "named catalog fixture");
        }
    };

    CLI::App* cmd_parse = app.add_subcommand("parse", "validate and echo canonical PD");
    add_common(cmd_parse, true);

    CLI::App* cmd_inv = app.add_subcommand("invariants",
                                           "components, polynomials, linking data");
    add_common(cmd_inv, true);

    CLI::App* cmd_transform =
        app.add_subcommand("transform", "apply a lassoing or crossing change");
    add_common(cmd_transform, true);
    std::optional<int> opt_lasso, opt_component_lasso, opt_change, opt_anti;
    cmd_transform->add_option("--lasso", opt_lasso, "lasso at crossing id");
    cmd_transform->add_option("--component-lasso", opt_component_lasso,
                              "lasso at a self-crossing id");
    cmd_transform->add_option("--change", opt_change, "change crossing id");
    cmd_transform->add_option("--anti-lasso", opt_anti,
                              "remove the lasso step with this log index");
    cmd_transform->add_option("--log", log_path, "transform log sidecar file");

    CLI::App* cmd_bounds =
        app.add_subcommand("bounds", "certified complete-splitting bounds");
    add_common(cmd_bounds, true);
    cmd_bounds->add_option("--log", log_path, "transform log sidecar file");
    cmd_bounds->add_option("--budget", budget, "crossing-change search budget");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the property suites");
    add_common(cmd_verify, false);

    CLI::App* cmd_catalog = app.add_subcommand("catalog", "list fixtures");
    add_common(cmd_catalog, false);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = e.get_exit_code() == 0 ? 0 : 2;
        return result;
    }

    detail::Output o;
    auto resolver = [](const std::string& name) { return catalog(name); };
    try {
        if (cmd_parse->parsed()) {
            auto loaded = detail::load_input(input, stdin_text);
            o.kv("pd", serialize_pd(loaded.diagram));
        } else if (cmd_inv->parsed()) {
            auto loaded = detail::load_input(input, stdin_text);
            detail::emit_invariants(o, loaded.diagram, loaded.catalog_name);
        } else if (cmd_transform->parsed()) {
            int moves = (opt_lasso ? 1 : 0) + (opt_component_lasso ? 1 : 0) +
                        (opt_change ? 1 : 0) + (opt_anti ? 1 : 0);
            if (moves != 1)
                throw PreconditionError(
                    "transform takes exactly one of --lasso, "
                    "--component-lasso, --change, --anti-lasso");
            TransformLog log = TransformLog::over(Diagram::empty());
            bool from_file = false;
            if (!log_path.empty()) {
                std::ifstream probe(log_path);
                if (probe.good()) {
                    log = parse_log(detail::read_file(log_path), resolver);
                    from_file = true;
                }
            }
            if (!from_file) {
                auto loaded = detail::load_input(input, stdin_text);
                log = TransformLog::over(loaded.diagram, loaded.catalog_name);
            }
            if (opt_lasso) {
                log = log.with_lasso(*opt_lasso);
                o.kv("applied", "lasso " + std::to_string(*opt_lasso));
                o.kv("created_component",
                     static_cast<long long>(log.steps().back().created_component));
            } else if (opt_component_lasso) {
                log = log.with_component_lasso(*opt_component_lasso);
                o.kv("applied",
                     "component-lasso " + std::to_string(*opt_component_lasso));
                o.kv("created_component",
                     static_cast<long long>(log.steps().back().created_component));
            } else if (opt_change) {
                log = log.with_change(*opt_change);
                o.kv("applied", "change " + std::to_string(*opt_change));
            } else {
                log = log.without_lasso_step(*opt_anti);
                o.kv("applied", "anti-lasso " + std::to_string(*opt_anti));
            }
            o.kv("r", static_cast<long long>(log.lasso_count()));
            o.kv("s", static_cast<long long>(log.base_component_count()));
            o.kv("components",
                 static_cast<long long>(log.current().component_count()));
            o.kv("pd", render_pd(log.current().pd()));
            if (!log_path.empty()) {
                std::ofstream out_file(log_path, std::ios::trunc);
                if (!out_file)
                    throw PreconditionError("cannot write log file '" +
                                            log_path + "'");
                out_file << serialize_log(log);
                o.kv("log", log_path);
            }
        } else if (cmd_bounds->parsed()) {
            SplitBounds bounds;
            if (!log_path.empty()) {
                TransformLog log =
                    parse_log(detail::read_file(log_path), resolver);
                SplitBounds base = diagram_bounds(log.base(), budget);
                bounds = split_bounds_from_log(log, base);
                o.kv("r", static_cast<long long>(log.lasso_count()));
                o.kv("s", static_cast<long long>(log.base_component_count()));
            } else {
                auto loaded = detail::load_input(input, stdin_text);
                bounds = diagram_bounds(loaded.diagram, budget);
            }
            o.kv("bounds", bounds.render());
            o.json["lower"] = {{"value", bounds.lower.value},
                               {"rule", to_string(bounds.lower.rule)}};
            o.json["upper"] = {{"value", bounds.upper.value},
                               {"rule", to_string(bounds.upper.rule)}};
            o.json["exact"] = bounds.exact;
        } else if (cmd_verify->parsed()) {
            std::vector<detail::Suite> suites = {
                detail::run_catalog_suite(), detail::run_z3_suite(),
                detail::run_linking_neutrality_suite(),
                detail::run_sandwich_suite()};
            int total_failures = 0;
            nlohmann::json js = nlohmann::json::array();
            for (const detail::Suite& s : suites) {
                o.text << "suite=" << s.name << " cases=" << s.cases
                       << " failures=" << s.failures << "\n";
                js.push_back({{"suite", s.name},
                              {"cases", s.cases},
                              {"failures", s.failures}});
                total_failures += s.failures;
            }
            o.json["suites"] = js;
            o.kv("verify", total_failures == 0 ? std::string("ok")
                                               : std::string("failed"));
            if (total_failures != 0) {
                result.out = as_json ? o.json.dump(2) + "\n" : o.text.str();
                result.exit_code = 2;
                return result;
            }
        } else if (cmd_catalog->parsed()) {
            nlohmann::json names = nlohmann::json::array();
            for (const std::string& n : catalog_names()) {
                o.text << "entry=" << n << "\n";
                names.push_back(n);
            }
            o.json["entries"] = names;
        }
    } catch (const ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
        return result;
    } catch (const ValidationError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
        return result;
    } catch (const PreconditionError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
        return result;
    }
    result.out = as_json ? o.json.dump(2) + "\n" : o.text.str();
    return result;
}

inline int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_text;
    bool wants_stdin = false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i] == "--input" && i + 1 < args.size() && args[i + 1] == "-")
            wants_stdin = true;
    bool has_source = false;
    for (const std::string& a : args)
        if (a == "--input" || a == "--catalog" || a == "--log") has_source = true;
    if (!args.empty() &&
        (args[0] == "parse" || args[0] == "invariants" ||
         args[0] == "transform" || args[0] == "bounds") &&
        (wants_stdin || !has_source)) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        stdin_text = buf.str();
    }
    RunResult r = run(args, stdin_text);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace splitkit::cli
