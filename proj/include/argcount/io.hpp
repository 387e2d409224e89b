#pragma once

// Reading and writing argumentation frameworks and results.
//
// Input: APX (`arg(a).` / `att(a,b).` facts) and TGF (node ids, `#`, edges).
// Output: canonical APX/TGF, strengths as JSON, traces as CSV, rankings and
// property reports as JSON, frameworks and dispute trees as DOT.

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>
#include <algorithm>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "argcount/counting.hpp"
#include "argcount/framework.hpp"
#include "argcount/ranking.hpp"
#include "argcount/walks.hpp"

namespace argcount {

enum class Severity { error, warning };

struct ParseDiagnostic {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based byte column
    std::string message;
    Severity severity = Severity::error;

    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(column) + ": " +
               (severity == Severity::error ? "error: " : "warning: ") + message;
    }
};

class ParseError : public Error {
public:
    explicit ParseError(std::vector<ParseDiagnostic> diagnostics)
        : Error(diagnostics.empty() ? "parse error" : diagnostics.front().to_string()),
          diagnostics_(std::move(diagnostics)) {}

    const std::vector<ParseDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

namespace detail {

class ApxScanner {
public:
    explicit ApxScanner(std::string_view text) : text_(text) {}

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_blank();
        return pos_ >= text_.size();
    }

    std::pair<std::size_t, std::size_t> position() const { return {line_, column_}; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError({{line_, column_, message, Severity::error}});
    }

    void expect(char c) {
        skip_blank();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'" + found());
        advance();
    }

    std::string identifier() {
        skip_blank();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_]))
            advance();
        if (start == pos_)
            fail("expected an argument name" + found());
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

private:
    std::string found() const {
        if (pos_ >= text_.size())
            return ", found end of input";
        return std::string(", found '") + text_[pos_] + "'";
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct NameRef {
    std::string name;
    std::size_t line;
    std::size_t column;
};

} // namespace detail

/**
 * Parses the APX dialect: `arg(<name>).` and `att(<name>,<name>).` facts with
 * names matching [A-Za-z0-9_]+. Whitespace between tokens is free, `%` starts
 * a comment running to the end of the line. An attack may precede the
 * declaration of its endpoints, but every endpoint must be declared somewhere.
 *
 * Argument order is order of first mention in the file. Duplicate `arg`
 * facts produce warnings (appended to `warnings` when given).
 */
inline Framework parse_apx(std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr) {
    detail::ApxScanner in(text);
    std::vector<std::string> order;
    std::unordered_set<std::string> mentioned;
    std::unordered_set<std::string> declared;
    std::vector<std::pair<detail::NameRef, detail::NameRef>> attack_refs;

    auto mention = [&](const std::string& name) {
        if (mentioned.insert(name).second)
            order.push_back(name);
    };

    while (!in.at_end()) {
        const auto [line, column] = in.position();
        const std::string keyword = in.identifier();
        if (keyword == "arg") {
            in.expect('(');
            const std::string name = in.identifier();
            in.expect(')');
            in.expect('.');
            if (!declared.insert(name).second && warnings)
                warnings->push_back({line, column, "duplicate declaration of '" + name + "'",
                                     Severity::warning});
            mention(name);
        } else if (keyword == "att") {
            in.expect('(');
            in.skip_blank();
            const auto [fl, fc] = in.position();
            const std::string from = in.identifier();
            in.expect(',');
            in.skip_blank();
            const auto [tl, tc] = in.position();
            const std::string to = in.identifier();
            in.expect(')');
            in.expect('.');
            mention(from);
            mention(to);
            attack_refs.push_back({{from, fl, fc}, {to, tl, tc}});
        } else {
            throw ParseError({{line, column, "unknown fact '" + keyword + "', expected arg or att",
                               Severity::error}});
        }
    }

    std::vector<ParseDiagnostic> errors;
    for (const auto& [from, to] : attack_refs)
        for (const auto* ref : {&from, &to})
            if (!declared.count(ref->name))
                errors.push_back({ref->line, ref->column,
                                  "undeclared argument '" + ref->name + "'", Severity::error});
    if (!errors.empty())
        throw ParseError(std::move(errors));

    std::vector<std::pair<std::string, std::string>> attacks;
    attacks.reserve(attack_refs.size());
    for (const auto& [from, to] : attack_refs)
        attacks.emplace_back(from.name, to.name);
    return Framework(std::move(order), attacks);
}

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto space = [&](std::size_t k) { return std::isspace(static_cast<unsigned char>(line[k])) != 0; };
    while (i < line.size()) {
        while (i < line.size() && space(i))
            ++i;
        const std::size_t begin = i;
        while (i < line.size() && !space(i))
            ++i;
        if (i > begin)
            out.push_back({std::string(line.substr(begin, i - begin)), begin + 1});
    }
    return out;
}

} // namespace detail

/// Parses Trivial Graph Format: one node id per line, a line holding only
/// `#`, then `<from> <to>` edge lines. Blank lines are skipped.
inline Framework parse_tgf(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_set<std::string> known;
    std::vector<std::pair<std::string, std::string>> attacks;
    bool in_edges = false;
    std::size_t line_no = 0;

    auto error = [&](std::size_t column, const std::string& msg) {
        throw ParseError({{line_no, column, msg, Severity::error}});
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;
        start = end + 1;

        const auto tokens = detail::split_ws(line);
        if (tokens.empty())
            continue;
        const std::size_t col = tokens[0].column;
        if (!in_edges) {
            if (tokens.size() == 1 && tokens[0].text == "#") {
                in_edges = true;
                continue;
            }
            if (tokens.size() != 1)
                error(tokens[1].column, "node line must hold exactly one id");
            if (!known.insert(tokens[0].text).second)
                error(col, "duplicate node id '" + tokens[0].text + "'");
            names.push_back(tokens[0].text);
        } else {
            if (tokens.size() != 2)
                error(col, "edge line must hold exactly two ids");
            for (const auto& id : tokens)
                if (!known.count(id.text))
                    error(id.column, "edge refers to unknown node '" + id.text + "'");
            attacks.emplace_back(tokens[0].text, tokens[1].text);
        }
    }
    if (!in_edges)
        throw ParseError({{line_no, 1, "missing '#' separator between nodes and edges", Severity::error}});
    return Framework(std::move(names), attacks);
}

enum class InputFormat { apx, tgf, automatic };

inline InputFormat format_for_path(const std::string& path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".apx"))
        return InputFormat::apx;
    if (ends_with(".tgf"))
        return InputFormat::tgf;
    throw Error("cannot infer input format from '" + path + "', use --format apx|tgf");
}

inline Framework parse(std::string_view text, InputFormat format) {
    switch (format) {
    case InputFormat::apx: return parse_apx(text);
    case InputFormat::tgf: return parse_tgf(text);
    case InputFormat::automatic: break;
    }
    throw Error("input format must be resolved before parsing");
}

/// Canonical APX: all arg facts in index order, then att facts sorted by
/// (attacker, target) index.
inline std::string emit_apx(const Framework& af) {
    std::string out;
    for (const auto& name : af.names())
        out += "arg(" + name + ").\n";
    for (const auto& a : af.attacks())
        out += "att(" + af.name(a.attacker) + "," + af.name(a.target) + ").\n";
    return out;
}

inline std::string emit_tgf(const Framework& af) {
    std::string out;
    for (const auto& name : af.names())
        out += name + "\n";
    out += "#\n";
    for (const auto& a : af.attacks())
        out += af.name(a.attacker) + " " + af.name(a.target) + "\n";
    return out;
}

/// %.17g: enough digits to round-trip any double.
inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

/**
 * {"alpha":a,"epsilon":e,"iterations":k,"strengths":{"name":v,...}}
 *
 * Keys follow framework index order; reals use 17 significant digits.
 * `iterations` is null without a trace.
 */
inline std::string emit_strengths_json(const Framework& af, const StrengthVector& strengths,
                                       const CountingParams& params,
                                       const ValuationTrace* trace = nullptr) {
    if (strengths.size() != af.size())
        throw Error("strength vector does not match framework size");
    std::string out = "{\"alpha\":" + format_real(params.alpha) +
                      ",\"epsilon\":" + format_real(params.epsilon) + ",\"iterations\":" +
                      (trace ? std::to_string(trace->iterations()) : std::string("null")) +
                      ",\"strengths\":{";
    for (ArgIndex i = 0; i < af.size(); ++i) {
        if (i)
            out += ',';
        out += json_string(af.name(i)) + ":" + format_real(strengths[i]);
    }
    out += "}}\n";
    return out;
}

/// One row per iterate: `k,delta,<values>`; row 0 has an empty delta.
inline std::string emit_trace_csv(const Framework& af, const ValuationTrace& trace) {
    std::string out = "k,delta";
    for (const auto& name : af.names())
        out += "," + name;
    out += '\n';
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        out += std::to_string(k) + ",";
        if (k > 0)
            out += format_real(trace.deltas[k - 1]);
        for (double v : trace.iterates[k])
            out += "," + format_real(v);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string emit_dot(const Framework& af) {
    std::string out = "digraph AF {\n";
    for (const auto& name : af.names())
        out += "  " + detail::dot_id(name) + ";\n";
    for (const auto& a : af.attacks())
        out += "  " + detail::dot_id(af.name(a.attacker)) + " -> " + detail::dot_id(af.name(a.target)) +
               ";\n";
    out += "}\n";
    return out;
}

/// Dispute tree as DOT: node labels `name^(depth)`, defenders solid,
/// attackers dashed, edges from each attacker to the node it attacks.
inline std::string emit_dot(const Framework& af, const DisputeTree& tree) {
    std::string out = "digraph DisputeTree {\n";
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        const auto& node = tree.nodes[k];
        out += "  n" + std::to_string(k) + " [label=" +
               detail::dot_id(af.name(node.argument) + "^(" + std::to_string(node.depth) + ")") +
               ", style=" + (node.status() == NodeStatus::defender ? "solid" : "dashed") + "];\n";
    }
    for (std::size_t k = 0; k < tree.nodes.size(); ++k)
        if (tree.nodes[k].parent)
            out += "  n" + std::to_string(k) + " -> n" + std::to_string(*tree.nodes[k].parent) + ";\n";
    out += "}\n";
    return out;
}

/// Equivalence classes strongest first, each a name-sorted list.
inline std::vector<std::vector<std::string>> ranking_classes(const Framework& af, const Ranking& r) {
    std::vector<std::vector<std::string>> out;
    for (const auto& members : r.classes()) {
        std::vector<std::string> names;
        for (auto i : members)
            names.push_back(af.name(i));
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    return out;
}

inline std::string emit_ranking_json(const Framework& af, const Ranking& r) {
    return nlohmann::json(ranking_classes(af, r)).dump() + "\n";
}

/// `x4 > x1 > x3 > x2`, with `=` inside a class.
inline std::string emit_ranking_plain(const Framework& af, const Ranking& r) {
    std::string out;
    for (const auto& cls : ranking_classes(af, r)) {
        if (!out.empty())
            out += " > ";
        for (std::size_t k = 0; k < cls.size(); ++k)
            out += (k ? " = " : "") + cls[k];
    }
    return out + "\n";
}

inline std::string emit_report_json(const Framework& af, const PropertyReport& report) {
    nlohmann::ordered_json j;
    j["passed"] = report.passed();
    auto& props = j["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : report.properties) {
        nlohmann::ordered_json entry;
        entry["name"] = p.name;
        entry["status"] = to_string(p.status);
        entry["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : p.witnesses)
            entry["witnesses"].push_back({{"x", af.name(w.x)}, {"y", af.name(w.y)}, {"violation", w.violation}});
        props.push_back(std::move(entry));
    }
    auto& ties = j["near_ties"] = nlohmann::ordered_json::array();
    for (const auto& [x, y] : report.near_ties)
        ties.push_back({af.name(x), af.name(y)});
    return j.dump() + "\n";
}

} // namespace argcount
