#ifndef VNREG_RULEDSL_HPP
#define VNREG_RULEDSL_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "local_rule.hpp"

namespace vnreg::dsl {

// Rule programs in "first case that applies" form:
//
//   # comment
//   radius 2
//   **00* -> 1
//   **01* -> 0
//   ***** -> 0
//
// Patterns are windows over {0,1,*} of length 2r+1, leftmost cell first.

struct PatternRule {
    std::string pattern;
    Bit output = 0;

    bool matches(std::uint64_t window) const {
        const std::size_t n = pattern.size();
        for (std::size_t i = 0; i < n; ++i) {
            const char c = pattern[i];
            if (c == '*')
                continue;
            const auto bit = (window >> (n - 1 - i)) & 1U;
            if (bit != static_cast<std::uint64_t>(c - '0'))
                return false;
        }
        return true;
    }

    friend bool operator==(const PatternRule&, const PatternRule&) = default;
};

struct PatternProgram {
    unsigned radius = 0;
    std::vector<PatternRule> rules;

    friend bool operator==(const PatternProgram&, const PatternProgram&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

/// Evaluates the program: output of the first rule matching the window.
inline std::optional<Bit> evaluate(const PatternProgram& p, std::uint64_t window) {
    for (const auto& rule : p.rules)
        if (rule.matches(window))
            return rule.output;
    return std::nullopt;
}

inline PatternProgram parse(std::string_view text) {
    PatternProgram prog;
    bool have_radius = false;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        last_line = line_no;
        if (!have_radius) {
            std::istringstream ls{std::string(line)};
            std::string key;
            long r = -1;
            std::string extra;
            if (!(ls >> key) || key != "radius")
                throw ParseError(line_no, "expected 'radius <r>' header");
            if (!(ls >> r) || (ls >> extra) || r < 0 || r > static_cast<long>(kMaxTableRadius))
                throw ParseError(line_no, "bad radius");
            prog.radius = static_cast<unsigned>(r);
            have_radius = true;
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw ParseError(line_no, "expected '<pattern> -> <bit>'");
        const auto pat = detail::trim(line.substr(0, arrow));
        const auto out = detail::trim(line.substr(arrow + 2));
        if (pat.empty())
            throw ParseError(line_no, "empty pattern");
        for (char c : pat)
            if (c != '0' && c != '1' && c != '*')
                throw ParseError(line_no, std::string("bad pattern character '") + c + "'");
        if (pat.size() % 2 == 0)
            throw ParseError(line_no, "pattern length must be odd");
        if (pat.size() != 2 * prog.radius + 1)
            throw ParseError(line_no, "pattern length " + std::to_string(pat.size()) + " does not match radius " +
                                          std::to_string(prog.radius));
        if (out != "0" && out != "1")
            throw ParseError(line_no, "output must be 0 or 1");
        prog.rules.push_back({std::string(pat), static_cast<Bit>(out[0] - '0')});
    }
    if (!have_radius)
        throw ParseError(line_no, "missing 'radius <r>' header");
    if (prog.rules.empty())
        throw ParseError(line_no, "program has no rules");
    const std::uint64_t windows = std::uint64_t{1} << (2 * prog.radius + 1);
    for (std::uint64_t w = 0; w < windows; ++w)
        if (!evaluate(prog, w))
            throw ParseError(last_line, "program is not total: window " + Word::from_index(w, 2 * prog.radius + 1).str() +
                                            " matches no rule");
    return prog;
}

inline LocalRule compile(const PatternProgram& p) {
    LocalRule f(p.radius);
    for (std::uint64_t w = 0; w < f.table_size(); ++w)
        f.set(w, evaluate(p, w).value_or(0) == 1);
    return f;
}

inline std::string emit(const PatternProgram& p) {
    std::string out = "radius " + std::to_string(p.radius) + "\n";
    for (const auto& rule : p.rules)
        out += rule.pattern + " -> " + std::to_string(int(rule.output)) + "\n";
    return out;
}

inline PatternProgram load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

inline const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"eca6-inverse",  "eca7-inverse",  "eca23-inverse",
                                                "eca33-inverse", "eca57-inverse", "eca77-inverse"};
    return names;
}

/// The six shipped weak-inverse programs, loaded from `<dir>/<name>.rule`.
inline std::map<std::string, PatternProgram> transcribe_figures(const std::filesystem::path& dir) {
    std::map<std::string, PatternProgram> out;
    for (const auto& name : figure_names())
        out.emplace(name, load(dir / (name + ".rule")));
    return out;
}

} // namespace vnreg::dsl

#endif
