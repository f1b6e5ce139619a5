#ifndef VNREG_DFA_HPP
#define VNREG_DFA_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bits.hpp"

namespace vnreg {

using State = std::uint32_t;

/// Deterministic, total automaton over {0,1}.
struct Dfa {
    std::vector<std::array<State, 2>> next;
    std::vector<bool> accepting;
    State initial = 0;

    std::size_t size() const noexcept { return next.size(); }

    State add_state(bool accept) {
        next.push_back({0, 0});
        accepting.push_back(accept);
        return static_cast<State>(next.size() - 1);
    }

    State run(State s, const Word& w) const {
        for (Bit b : w)
            s = next[s][b];
        return s;
    }

    bool accepts(const Word& w) const { return accepting[run(initial, w)]; }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Nondeterministic automaton over {0,1} without epsilon moves.
struct Nfa {
    std::vector<std::array<std::vector<State>, 2>> next;
    std::vector<bool> accepting;
    std::vector<State> initial;

    std::size_t size() const noexcept { return next.size(); }

    State add_state(bool accept) {
        next.emplace_back();
        accepting.push_back(accept);
        return static_cast<State>(next.size() - 1);
    }

    void add_edge(State from, Bit b, State to) { next[from][b].push_back(to); }
};

namespace detail {

struct StateSetHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State s : v)
            h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace detail

/// Subset construction. The empty subset becomes a rejecting sink.
inline Dfa determinize(const Nfa& nfa) {
    Dfa dfa;
    std::unordered_map<std::vector<State>, State, detail::StateSetHash> ids;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> set) {
        auto it = ids.find(set);
        if (it != ids.end())
            return it->second;
        bool acc = false;
        for (State s : set)
            acc = acc || nfa.accepting[s];
        const State id = dfa.add_state(acc);
        ids.emplace(set, id);
        subsets.push_back(std::move(set));
        return id;
    };
    std::vector<State> start = nfa.initial;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    dfa.initial = intern(std::move(start));
    std::vector<char> mark(nfa.size(), 0);
    for (State id = 0; id < dfa.size(); ++id) {
        for (Bit b = 0; b < 2; ++b) {
            std::vector<State> target;
            for (State s : subsets[id])
                for (State t : nfa.next[s][b])
                    if (!mark[t]) {
                        mark[t] = 1;
                        target.push_back(t);
                    }
            for (State t : target)
                mark[t] = 0;
            std::sort(target.begin(), target.end());
            const State to = intern(std::move(target));
            dfa.next[id][b] = to;
        }
    }
    return dfa;
}

/// Minimal DFA in canonical numbering (breadth-first from the initial state,
/// 0-edge before 1-edge), so equal languages give equal structures.
inline Dfa minimize(const Dfa& dfa) {
    // reachable part
    std::vector<State> order;
    std::vector<std::int64_t> pos(dfa.size(), -1);
    order.push_back(dfa.initial);
    pos[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Bit b = 0; b < 2; ++b) {
            const State t = dfa.next[order[i]][b];
            if (pos[t] < 0) {
                pos[t] = static_cast<std::int64_t>(order.size());
                order.push_back(t);
            }
        }
    const std::size_t n = order.size();
    std::vector<std::array<State, 2>> next(n);
    std::vector<State> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (Bit b = 0; b < 2; ++b)
            next[i][b] = static_cast<State>(pos[dfa.next[order[i]][b]]);
        cls[i] = dfa.accepting[order[i]] ? 1 : 0;
    }
    // Moore refinement
    std::size_t classes = 0;
    for (;;) {
        std::map<std::array<State, 3>, State> sig;
        std::vector<State> refined(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::array<State, 3> key{cls[i], cls[next[i][0]], cls[next[i][1]]};
            auto [it, inserted] = sig.emplace(key, static_cast<State>(sig.size()));
            refined[i] = it->second;
        }
        const std::size_t count = sig.size();
        cls = std::move(refined);
        if (count == classes)
            break;
        classes = count;
    }
    // canonical BFS numbering of the quotient
    std::vector<std::int64_t> id(classes, -1);
    std::vector<std::size_t> rep(classes);
    for (std::size_t i = 0; i < n; ++i)
        rep[cls[i]] = i;
    Dfa out;
    std::vector<State> queue{cls[0]};
    id[cls[0]] = 0;
    out.add_state(dfa.accepting[order[rep[cls[0]]]]);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const std::size_t r = rep[queue[i]];
        for (Bit b = 0; b < 2; ++b) {
            const State c = cls[next[r][b]];
            if (id[c] < 0) {
                id[c] = static_cast<std::int64_t>(queue.size());
                queue.push_back(c);
                out.add_state(dfa.accepting[order[rep[c]]]);
            }
            out.next[i][b] = static_cast<State>(id[c]);
        }
    }
    out.initial = 0;
    return out;
}

// States from which some accepting state is reachable.
inline std::vector<bool> coreachable(const Dfa& dfa) {
    std::vector<std::vector<State>> rev(dfa.size());
    for (State s = 0; s < dfa.size(); ++s)
        for (Bit b = 0; b < 2; ++b)
            rev[dfa.next[s][b]].push_back(s);
    std::vector<bool> live(dfa.size(), false);
    std::vector<State> stack;
    for (State s = 0; s < dfa.size(); ++s)
        if (dfa.accepting[s]) {
            live[s] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        const State s = stack.back();
        stack.pop_back();
        for (State p : rev[s])
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
    }
    return live;
}

// Line-based text format:
//   states <n>
//   initial <q>
//   accepting <q>...
//   <q> <bit> <q'>        (one line per transition)
inline void write_text(std::ostream& os, const Dfa& dfa) {
    os << "states " << dfa.size() << "\n";
    os << "initial " << dfa.initial << "\n";
    os << "accepting";
    for (State s = 0; s < dfa.size(); ++s)
        if (dfa.accepting[s])
            os << " " << s;
    os << "\n";
    for (State s = 0; s < dfa.size(); ++s)
        for (Bit b = 0; b < 2; ++b)
            os << s << " " << int(b) << " " << dfa.next[s][b] << "\n";
}

inline Dfa read_text(std::istream& is) {
    auto fail = [](const std::string& why) { throw std::invalid_argument("dfa text: " + why); };
    std::string line;
    std::string key;
    Dfa dfa;
    std::size_t n = 0;
    if (!std::getline(is, line))
        fail("missing states line");
    {
        std::istringstream ls(line);
        if (!(ls >> key >> n) || key != "states" || n == 0)
            fail("expected 'states <n>'");
    }
    dfa.next.assign(n, {0, 0});
    dfa.accepting.assign(n, false);
    if (!std::getline(is, line))
        fail("missing initial line");
    {
        std::istringstream ls(line);
        if (!(ls >> key >> dfa.initial) || key != "initial" || dfa.initial >= n)
            fail("expected 'initial <q>'");
    }
    if (!std::getline(is, line))
        fail("missing accepting line");
    {
        std::istringstream ls(line);
        if (!(ls >> key) || key != "accepting")
            fail("expected 'accepting ...'");
        State s;
        while (ls >> s) {
            if (s >= n)
                fail("accepting state out of range");
            dfa.accepting[s] = true;
        }
    }
    std::vector<std::array<bool, 2>> seen(n, {false, false});
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        State s, t;
        int b;
        if (!(ls >> s >> b >> t) || s >= n || t >= n || (b != 0 && b != 1))
            fail("bad transition line '" + line + "'");
        dfa.next[s][b] = t;
        seen[s][b] = true;
    }
    for (const auto& sb : seen)
        if (!sb[0] || !sb[1])
            fail("transition map is not total");
    return dfa;
}

} // namespace vnreg

#endif
