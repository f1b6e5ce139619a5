#ifndef VNREG_SERIALIZE_HPP
#define VNREG_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "certificate.hpp"
#include "dfa.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"
#include "sofic.hpp"

// JSON documents for automata, certificates and verdicts. Words are strings
// of 0/1, rules are rule specs ("eca:<n>", "hex:r<r>:<digits>", "bin:r0:<bits>").

namespace vnreg::json {

using nlohmann::json;  // NOLINT

inline json to_json(const Word& w) { return w.str(); }

inline Word word_from(const json& j) { return Word::parse(j.get<std::string>()); }

inline json to_json(const LocalRule& f) { return to_rule_spec(f); }

inline json to_json(const Dfa& d) {
    json accepting = json::array();
    json next = json::array();
    for (State s = 0; s < d.size(); ++s) {
        if (d.accepting[s])
            accepting.push_back(s);
        next.push_back({d.next[s][0], d.next[s][1]});
    }
    return {{"states", d.size()}, {"initial", d.initial}, {"accepting", accepting}, {"next", next}};
}

inline Dfa dfa_from(const json& j) {
    Dfa d;
    const auto n = j.at("states").get<std::size_t>();
    d.next.assign(n, {0, 0});
    d.accepting.assign(n, false);
    d.initial = j.at("initial").get<State>();
    for (const auto& s : j.at("accepting"))
        d.accepting.at(s.get<State>()) = true;
    const auto& next = j.at("next");
    if (next.size() != n)
        throw std::invalid_argument("dfa json: transition table has wrong length");
    for (std::size_t s = 0; s < n; ++s)
        for (Bit b = 0; b < 2; ++b) {
            const auto t = next.at(s).at(b).get<State>();
            if (t >= n || d.initial >= n)
                throw std::invalid_argument("dfa json: state out of range");
            d.next[s][b] = t;
        }
    return d;
}

inline json to_json(const EventuallyPeriodicPoint& x) {
    return {{"left", x.left.str()}, {"middle", x.middle.str()}, {"right", x.right.str()}};
}

inline EventuallyPeriodicPoint epp_from(const json& j) {
    return {word_from(j.at("left")), word_from(j.at("middle")), word_from(j.at("right"))};
}

inline json to_json(const GAssignment& g) {
    json out = json::array();
    for (const auto& [u, pre] : g)
        out.push_back({{"point", u.str()}, {"preimage", pre.str()}});
    return out;
}

inline GAssignment assignment_from(const json& j) {
    GAssignment g;
    for (const auto& e : j)
        g.emplace_back(word_from(e.at("point")), word_from(e.at("preimage")));
    return g;
}

inline json to_json(const ForcingSource& s) {
    return {{"point", s.u.str()}, {"position", s.position}, {"bit", int(s.bit)}};
}

inline ForcingSource source_from(const json& j) {
    const int bit = j.at("bit").get<int>();
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("forcing source bit must be 0 or 1");
    return {word_from(j.at("point")), j.at("position").get<std::size_t>(), static_cast<Bit>(bit)};
}

inline json to_json(const Certificate& c) {
    struct Visitor {
        json operator()(const ImageNotSft&) const { return json::object(); }
        json operator()(const WeakPpcFailure& c) const { return {{"point", c.u.str()}}; }
        json operator()(const SppFailure& c) const {
            json leaves = json::array();
            for (const auto& l : c.leaves)
                leaves.push_back({{"assignment", to_json(l.assignment)},
                                  {"u", l.u.str()},
                                  {"w", l.w.str()},
                                  {"v", l.v.str()}});
            return {{"period", c.p}, {"lmax", c.lmax}, {"leaves", leaves}};
        }
        json operator()(const SurjectiveNotInjective& c) const { return {{"x", to_json(c.x)}, {"y", to_json(c.y)}}; }
        json operator()(const ForcingContradiction& c) const {
            return {{"radius", c.radius},
                    {"window", c.window.str()},
                    {"first", to_json(c.first)},
                    {"second", to_json(c.second)}};
        }
    };
    json out = std::visit(Visitor{}, c);
    out["kind"] = kind_name(c);
    return out;
}

inline Certificate certificate_from(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "ImageNotSft")
        return ImageNotSft{};
    if (kind == "WeakPpcFailure")
        return WeakPpcFailure{word_from(j.at("point"))};
    if (kind == "SppFailure") {
        SppFailure c;
        c.p = j.at("period").get<std::size_t>();
        c.lmax = j.at("lmax").get<std::size_t>();
        for (const auto& l : j.at("leaves"))
            c.leaves.push_back(
                {assignment_from(l.at("assignment")), word_from(l.at("u")), word_from(l.at("w")), word_from(l.at("v"))});
        return c;
    }
    if (kind == "SurjectiveNotInjective")
        return SurjectiveNotInjective{epp_from(j.at("x")), epp_from(j.at("y"))};
    if (kind == "ForcingContradiction")
        return ForcingContradiction{j.at("radius").get<unsigned>(), word_from(j.at("window")),
                                    source_from(j.at("first")), source_from(j.at("second"))};
    throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

inline json to_json(const Verdict& v) {
    json out{{"verdict", verdict_name(v)}};
    if (auto* r = std::get_if<Regular>(&v)) {
        out["witness"] = to_json(r->witness);
    } else if (auto* n = std::get_if<NonRegular>(&v)) {
        out["certificate"] = to_json(n->certificate);
    } else {
        const auto& u = std::get<Unknown>(v);
        out["bounds"] = {{"pmax", u.pmax}, {"lmax", u.lmax}, {"rmax", u.rmax}};
        out["reason"] = u.reason;
    }
    return out;
}

inline Verdict verdict_from(const json& j) {
    const auto name = j.at("verdict").get<std::string>();
    if (name == "Regular")
        return Regular{parse_rule_spec(j.at("witness").get<std::string>())};
    if (name == "NonRegular")
        return NonRegular{certificate_from(j.at("certificate"))};
    if (name == "Unknown") {
        const auto& b = j.at("bounds");
        return Unknown{b.at("pmax").get<std::size_t>(), b.at("lmax").get<std::size_t>(), b.at("rmax").get<unsigned>(),
                       j.value("reason", "")};
    }
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

inline json words_json(const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws)
        out.push_back(w.str());
    return out;
}

/// Image report: minimal DFA, SFT flag and forbidden words when finite.
inline json image_report(const LocalRule& f, const SoficShift& img) {
    json out{{"rule", to_json(f)}, {"dfa", to_json(img.dfa())}, {"full_shift", is_full_shift(img)}};
    const auto forbidden = minimal_forbidden_words(img);
    out["sft"] = forbidden.has_value();
    out["forbidden"] = forbidden ? words_json(*forbidden) : json(nullptr);
    return out;
}

} // namespace vnreg::json

#endif
