#pragma once

// Command-line front end. run() takes the output and error streams so the
// commands can be driven in-process.
//
// Exit codes: 0 success, 1 input or usage error (and failed property checks),
// 2 iteration did not converge within --max-iter.

#include <fstream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "argcount/classical.hpp"
#include "argcount/counting.hpp"
#include "argcount/framework.hpp"
#include "argcount/io.hpp"
#include "argcount/random.hpp"
#include "argcount/ranking.hpp"
#include "argcount/walks.hpp"

namespace argcount::cli {

enum ExitCode : int { success = 0, input_error = 1, not_converged = 2 };

struct Config {
    std::string input;
    std::string format = "auto";
    CountingParams params;
    std::string output;
    std::string trace_path;
    std::string semantics;
    std::string from;
    std::string to;
    std::size_t length = 0;
    std::string root;
    std::size_t depth = 4;
    std::size_t random = 0;
    std::size_t size = 6;
    std::uint64_t seed = 1;
};

namespace detail {

inline Framework load(const Config& cfg) {
    if (cfg.input.empty())
        throw Error("--input is required");
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file)
        throw Error("cannot read '" + cfg.input + "'");
    const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    InputFormat format = InputFormat::automatic;
    if (cfg.format == "apx")
        format = InputFormat::apx;
    else if (cfg.format == "tgf")
        format = InputFormat::tgf;
    else
        format = format_for_path(cfg.input);
    try {
        return parse(text, format);
    } catch (const ParseError& e) {
        std::string message = cfg.input + ":" + e.diagnostics().front().to_string();
        for (std::size_t k = 1; k < e.diagnostics().size(); ++k)
            message += "\n" + cfg.input + ":" + e.diagnostics()[k].to_string();
        throw Error(message);
    }
}

inline std::string brace_set(const Framework& af, const ArgSet& s) {
    std::vector<std::string> names;
    for (auto x : s)
        names.push_back(af.name(x));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t k = 0; k < names.size(); ++k)
        out += (k ? "," : "") + names[k];
    return out + "}";
}

inline void write_trace(const Config& cfg, const Framework& af, const ValuationTrace& trace) {
    if (cfg.trace_path.empty())
        return;
    std::ofstream file(cfg.trace_path, std::ios::binary);
    if (!file)
        throw Error("cannot write trace to '" + cfg.trace_path + "'");
    file << emit_trace_csv(af, trace);
}

} // namespace detail

inline int cmd_solve(const Config& cfg, std::ostream& out) {
    cfg.params.validate();
    const Framework af = detail::load(cfg);
    const IterationResult result = iterate(af, cfg.params);
    detail::write_trace(cfg, af, result.trace);
    const std::string& format = cfg.output.empty() ? "plain" : cfg.output;
    if (format == "json") {
        out << emit_strengths_json(af, result.strengths, cfg.params, &result.trace);
    } else if (format == "csv") {
        out << "argument,strength\n";
        for (ArgIndex i = 0; i < af.size(); ++i)
            out << af.name(i) << ',' << format_real(result.strengths[i]) << '\n';
    } else if (format == "plain") {
        for (ArgIndex i = 0; i < af.size(); ++i)
            out << af.name(i) << ' ' << format_real(result.strengths[i]) << '\n';
    } else {
        throw Error("solve does not support --output " + format);
    }
    return result.converged ? success : not_converged;
}

inline int cmd_rank(const Config& cfg, std::ostream& out) {
    cfg.params.validate();
    const Framework af = detail::load(cfg);
    const IterationResult result = iterate(af, cfg.params);
    detail::write_trace(cfg, af, result.trace);
    const Ranking ranking(result.strengths);
    const std::string& format = cfg.output.empty() ? "plain" : cfg.output;
    if (format == "json")
        out << emit_ranking_json(af, ranking);
    else if (format == "plain")
        out << emit_ranking_plain(af, ranking);
    else
        throw Error("rank does not support --output " + format);
    return result.converged ? success : not_converged;
}

inline int cmd_extensions(const Config& cfg, std::ostream& out) {
    if (cfg.semantics.empty())
        throw Error("--semantics is required");
    const Semantics semantics = parse_semantics(cfg.semantics);
    const Framework af = detail::load(cfg);
    const ExtensionSet result = enumerate(af, semantics);
    const std::string& format = cfg.output.empty() ? "plain" : cfg.output;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& ext : result.extensions) {
            std::vector<std::string> names;
            for (auto x : ext)
                names.push_back(af.name(x));
            std::sort(names.begin(), names.end());
            j.push_back(names);
        }
        out << j.dump() << '\n';
    } else if (format == "plain") {
        if (result.extensions.empty()) {
            out << "none\n";
        } else {
            for (std::size_t k = 0; k < result.extensions.size(); ++k)
                out << (k ? " " : "") << detail::brace_set(af, result.extensions[k]);
            out << '\n';
        }
    } else {
        throw Error("extensions does not support --output " + format);
    }
    return success;
}

inline int cmd_walks(const Config& cfg, std::ostream& out) {
    if (cfg.from.empty() || cfg.to.empty())
        throw Error("--from and --to are required");
    const Framework af = detail::load(cfg);
    const BigInt count = count_walks(af, af.index_of(cfg.from), af.index_of(cfg.to), cfg.length);
    const std::string& format = cfg.output.empty() ? "plain" : cfg.output;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["from"] = cfg.from;
        j["to"] = cfg.to;
        j["length"] = cfg.length;
        j["count"] = count.str();
        out << j.dump() << '\n';
    } else if (format == "plain") {
        out << count.str() << '\n';
    } else {
        throw Error("walks does not support --output " + format);
    }
    return success;
}

inline int cmd_check(const Config& cfg, std::ostream& out) {
    cfg.params.validate();
    const std::string& format = cfg.output.empty() ? "plain" : cfg.output;
    if (format != "plain" && format != "json")
        throw Error("check does not support --output " + format);

    if (cfg.random > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> density(0.0, 0.5);
        bool all_passed = true;
        nlohmann::json reports = nlohmann::json::array();
        for (std::size_t k = 0; k < cfg.random; ++k) {
            const Framework af = random_framework(rng, cfg.size, density(rng));
            CheckOptions options;
            options.params = cfg.params;
            options.permutation = random_permutation(rng, af.size());
            const IterationResult result = iterate(af, cfg.params);
            if (!result.converged)
                throw NonConvergence(result);
            const PropertyReport report = check_properties(af, result.strengths, options);
            all_passed = all_passed && report.passed();
            if (format == "json") {
                reports.push_back(nlohmann::json::parse(emit_report_json(af, report)));
            } else {
                out << "random " << k << " (n=" << af.size() << ", attacks=" << af.attacks().size()
                    << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
                for (const auto& p : report.properties)
                    for (const auto& w : p.witnesses)
                        out << "  " << p.name << ": " << w.violation << '\n';
            }
        }
        if (format == "json")
            out << reports.dump() << '\n';
        return all_passed ? success : input_error;
    }

    const Framework af = detail::load(cfg);
    const IterationResult result = iterate(af, cfg.params);
    if (!result.converged)
        throw NonConvergence(result);
    CheckOptions options;
    options.params = cfg.params;
    const PropertyReport report = check_properties(af, result.strengths, options);
    if (format == "json") {
        out << emit_report_json(af, report);
    } else {
        for (const auto& p : report.properties) {
            out << p.name << ' ' << to_string(p.status) << '\n';
            for (const auto& w : p.witnesses)
                out << "  " << w.violation << '\n';
        }
        if (!report.near_ties.empty()) {
            out << "near ties (within 10*epsilon):";
            for (const auto& [x, y] : report.near_ties)
                out << ' ' << af.name(x) << '/' << af.name(y);
            out << '\n';
        }
    }
    return report.passed() ? success : input_error;
}

inline int cmd_dispute_tree(const Config& cfg, std::ostream& out) {
    if (cfg.root.empty())
        throw Error("--root is required");
    const Framework af = detail::load(cfg);
    const DisputeTree tree = dispute_tree(af, af.index_of(cfg.root), cfg.depth);
    const std::string& format = cfg.output.empty() ? "dot" : cfg.output;
    if (format == "dot") {
        out << emit_dot(af, tree);
    } else if (format == "plain") {
        for (std::size_t d = 0; d < tree.levels(); ++d) {
            out << d << ':';
            for (auto x : tree.level_arguments(d))
                out << ' ' << af.name(x) << "^(" << d << ')';
            out << '\n';
        }
    } else {
        throw Error("dispute-tree does not support --output " + format);
    }
    return success;
}

/// Parses argv and dispatches to the subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Attacker/defender counting semantics for abstract argumentation frameworks"};
    app.require_subcommand(1);
    Config cfg;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", cfg.input, "APX or TGF file");
        cmd->add_option("--format", cfg.format, "apx|tgf|auto")
            ->check(CLI::IsMember({"apx", "tgf", "auto"}));
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", cfg.output, "json|csv|dot|plain")
            ->check(CLI::IsMember({"json", "csv", "dot", "plain"}));
    };
    auto add_counting = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", cfg.params.alpha, "damping factor in (0,1)")->capture_default_str();
        cmd->add_option("--epsilon", cfg.params.epsilon, "termination tolerance")->capture_default_str();
        cmd->add_option("--max-iter", cfg.params.max_iter, "iteration limit")->capture_default_str();
        cmd->add_option("--trace", cfg.trace_path, "write the valuation trace as CSV");
    };

    auto* solve = app.add_subcommand("solve", "compute counting-semantics strengths");
    add_input(solve);
    add_output(solve);
    add_counting(solve);

    auto* rank_cmd = app.add_subcommand("rank", "rank arguments by strength");
    add_input(rank_cmd);
    add_output(rank_cmd);
    add_counting(rank_cmd);

    auto* extensions = app.add_subcommand("extensions", "enumerate Dung extensions");
    add_input(extensions);
    add_output(extensions);
    extensions->add_option("--semantics", cfg.semantics,
                           "admissible|complete|preferred|stable|grounded");

    auto* walks = app.add_subcommand("walks", "count walks of a given length");
    add_input(walks);
    add_output(walks);
    walks->add_option("--from", cfg.from, "walk source argument");
    walks->add_option("--to", cfg.to, "walk target argument");
    walks->add_option("--length", cfg.length, "walk length")->capture_default_str();

    auto* check = app.add_subcommand("check", "verify ranking properties");
    add_input(check);
    add_output(check);
    add_counting(check);
    check->add_option("--random", cfg.random, "check this many random frameworks instead of --input");
    check->add_option("--size", cfg.size, "arguments per random framework")->capture_default_str();
    check->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    auto* tree = app.add_subcommand("dispute-tree", "expand the dispute tree of an argument");
    add_input(tree);
    add_output(tree);
    tree->add_option("--root", cfg.root, "root argument");
    tree->add_option("--depth", cfg.depth, "depth limit")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : input_error;
    }

    try {
        if (*solve)
            return cmd_solve(cfg, out);
        if (*rank_cmd)
            return cmd_rank(cfg, out);
        if (*extensions)
            return cmd_extensions(cfg, out);
        if (*walks)
            return cmd_walks(cfg, out);
        if (*check)
            return cmd_check(cfg, out);
        if (*tree)
            return cmd_dispute_tree(cfg, out);
    } catch (const NonConvergence& e) {
        err << "argcount: " << e.what() << '\n';
        return not_converged;
    } catch (const std::exception& e) {
        err << "argcount: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace argcount::cli
