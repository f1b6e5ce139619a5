#ifndef VNREG_SOFIC_HPP
#define VNREG_SOFIC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bits.hpp"
#include "dfa.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"

namespace vnreg {

/// A binary subshift presented by the minimal DFA of its language.
///
/// The language is factorial and extensible, so every state except the
/// (unique, possibly absent) dead sink is accepting.
class SoficShift {
public:
    static SoficShift full_shift() {
        Dfa d;
        d.add_state(true);
        d.next[0] = {0, 0};
        return SoficShift(std::move(d));
    }

    // Takes any DFA of a factorial extensible language.
    static SoficShift from_dfa(const Dfa& dfa) { return SoficShift(minimize(dfa)); }

    const Dfa& dfa() const noexcept { return dfa_; }
    std::optional<State> dead_state() const noexcept { return dead_; }

    bool live(State s) const noexcept { return dfa_.accepting[s]; }
    bool accepts(const Word& w) const { return dfa_.accepts(w); }

    bool contains(const PeriodicPoint& x) const {
        const Word& u = x.period_word();
        std::vector<bool> seen(dfa_.size(), false);
        State q = dfa_.initial;
        while (!seen[q]) {
            if (!live(q))
                return false;
            seen[q] = true;
            q = dfa_.run(q, u);
        }
        return live(q);
    }

    bool contains(const EventuallyPeriodicPoint& x) const {
        // states q on the eventual cycle of q -> q.u; then q.w.v^n must stay live
        std::vector<std::int64_t> when(dfa_.size(), -1);
        std::vector<State> trail;
        State q = dfa_.initial;
        while (when[q] < 0) {
            if (!live(q))
                return false;
            when[q] = static_cast<std::int64_t>(trail.size());
            trail.push_back(q);
            q = dfa_.run(q, x.left);
        }
        for (std::size_t i = static_cast<std::size_t>(when[q]); i < trail.size(); ++i) {
            State s = dfa_.run(trail[i], x.middle);
            std::vector<bool> seen(dfa_.size(), false);
            while (!seen[s]) {
                if (!live(s))
                    return false;
                seen[s] = true;
                s = dfa_.run(s, x.right);
            }
        }
        return true;
    }

    friend bool operator==(const SoficShift&, const SoficShift&) = default;

private:
    explicit SoficShift(Dfa minimal) : dfa_(std::move(minimal)) {
        for (State s = 0; s < dfa_.size(); ++s)
            if (!dfa_.accepting[s])
                dead_ = s;
    }

    Dfa dfa_;
    std::optional<State> dead_;
};

/// Image f(X) of a subshift under a CA: the sliding-block transducer on
/// (state of X, last 2r input cells) read off as an output NFA, then
/// determinized and minimized.
inline SoficShift image(const LocalRule& f, const SoficShift& domain) {
    const Dfa& d = domain.dfa();
    const unsigned memory = 2 * f.radius();
    const std::uint64_t mask = low_mask(memory);
    Nfa nfa;
    std::map<std::pair<State, std::uint64_t>, State> ids;
    std::vector<std::pair<State, std::uint64_t>> nodes;
    auto intern = [&](State q, std::uint64_t s) {
        auto [it, inserted] = ids.emplace(std::make_pair(q, s), static_cast<State>(nodes.size()));
        if (inserted) {
            nodes.emplace_back(q, s);
            nfa.add_state(true);
        }
        return it->second;
    };
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << memory); ++s) {
        const State q = d.run(d.initial, Word::from_index(s, memory));
        if (domain.live(q))
            nfa.initial.push_back(intern(q, s));
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [q, s] = nodes[i];
        for (Bit b = 0; b < 2; ++b) {
            const State q2 = d.next[q][b];
            if (!domain.live(q2))
                continue;
            const std::uint64_t window = (s << 1) | b;
            const State to = intern(q2, window & mask);
            nfa.add_edge(static_cast<State>(i), f.at(window), to);
        }
    }
    return SoficShift::from_dfa(determinize(nfa));
}

inline SoficShift image(const LocalRule& f) { return image(f, SoficShift::full_shift()); }

/// Finite set of forbidden words.
struct SftPresentation {
    std::vector<Word> forbidden;
};

/// The SFT defined by forbidding the given words (language trimmed to
/// bi-infinitely extensible words).
inline SoficShift to_sofic(const SftPresentation& sft) {
    std::size_t longest = 1;
    for (const auto& w : sft.forbidden)
        longest = std::max(longest, w.size());
    const unsigned k = static_cast<unsigned>(std::max<std::size_t>(longest - 1, 1));
    auto clean = [&](const Word& w) {
        for (const auto& bad : sft.forbidden)
            for (std::size_t i = 0; i + bad.size() <= w.size(); ++i)
                if (w.substr(i, bad.size()) == bad)
                    return false;
        return true;
    };
    const std::uint64_t blocks = std::uint64_t{1} << k;
    std::vector<bool> alive(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b)
        alive[b] = clean(Word::from_index(b, k));
    auto edge_ok = [&](std::uint64_t from, Bit bit) {
        return clean(Word::from_index((from << 1) | bit, k + 1));
    };
    const std::uint64_t mask = low_mask(k);
    // prune vertices without both a successor and a predecessor
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<bool> has_in(blocks, false), has_out(blocks, false);
        for (std::uint64_t b = 0; b < blocks; ++b) {
            if (!alive[b])
                continue;
            for (Bit bit = 0; bit < 2; ++bit) {
                const std::uint64_t to = ((b << 1) | bit) & mask;
                if (alive[to] && edge_ok(b, bit)) {
                    has_out[b] = true;
                    has_in[to] = true;
                }
            }
        }
        for (std::uint64_t b = 0; b < blocks; ++b)
            if (alive[b] && (!has_in[b] || !has_out[b])) {
                alive[b] = false;
                changed = true;
            }
    }
    Nfa nfa;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        nfa.add_state(true);
        if (alive[b])
            nfa.initial.push_back(static_cast<State>(b));
    }
    for (std::uint64_t b = 0; b < blocks; ++b) {
        if (!alive[b])
            continue;
        for (Bit bit = 0; bit < 2; ++bit) {
            const std::uint64_t to = ((b << 1) | bit) & mask;
            if (alive[to] && edge_ok(b, bit))
                nfa.add_edge(static_cast<State>(b), static_cast<Bit>((b >> (k - 1)) & 1U), static_cast<State>(to));
        }
    }
    return SoficShift::from_dfa(determinize(nfa));
}

/// DFA of the minimal forbidden words M = { w not in L : every proper factor in L }.
/// Built as a product tracking the state of w, whether w minus its last
/// letter was live, and the state of w minus its first letter.
inline Dfa minimal_forbidden_dfa(const SoficShift& x) {
    const Dfa& d = x.dfa();
    constexpr State kNotStarted = ~State{0};
    using Key = std::tuple<State, bool, State>;
    std::map<Key, State> ids;
    std::vector<Key> keys;
    Dfa m;
    auto intern = [&](const Key& k) {
        auto [it, inserted] = ids.emplace(k, static_cast<State>(keys.size()));
        if (inserted) {
            keys.push_back(k);
            const auto& [full, prev_live, suffix] = k;
            const bool accept = suffix != kNotStarted && !x.live(full) && prev_live && x.live(suffix);
            m.add_state(accept);
        }
        return it->second;
    };
    m.initial = intern({d.initial, true, kNotStarted});
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto [full, prev_live, suffix] = keys[i];
        for (Bit b = 0; b < 2; ++b) {
            const State nsuffix = suffix == kNotStarted ? d.initial : d.next[suffix][b];
            const Key nk{d.next[full][b], x.live(full), nsuffix};
            const State to = intern(nk);
            m.next[i][b] = to;
        }
    }
    return minimize(m);
}

/// Explicit minimal forbidden words in lexicographic order, or nullopt when
/// the set is infinite (the live part of its minimal DFA has a cycle).
inline std::optional<std::vector<Word>> minimal_forbidden_words(const SoficShift& x) {
    const Dfa m = minimal_forbidden_dfa(x);
    const std::vector<bool> live = coreachable(m);
    // cycle detection among live states (all states here are reachable)
    std::vector<int> color(m.size(), 0);
    bool cyclic = false;
    std::function<void(State)> visit = [&](State s) {
        color[s] = 1;
        for (Bit b = 0; b < 2 && !cyclic; ++b) {
            const State t = m.next[s][b];
            if (!live[t])
                continue;
            if (color[t] == 1)
                cyclic = true;
            else if (color[t] == 0)
                visit(t);
        }
        color[s] = 2;
    };
    if (live[m.initial])
        visit(m.initial);
    if (cyclic)
        return std::nullopt;
    std::vector<Word> out;
    Word cur;
    std::function<void(State)> collect = [&](State s) {
        if (m.accepting[s])
            out.push_back(cur);
        for (Bit b = 0; b < 2; ++b) {
            const State t = m.next[s][b];
            if (!live[t])
                continue;
            cur.push_back(b);
            collect(t);
            cur.pop_back();
        }
    };
    if (live[m.initial])
        collect(m.initial);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_sft(const SoficShift& x) { return minimal_forbidden_words(x).has_value(); }

inline bool is_full_shift(const SoficShift& x) { return !x.dead_state().has_value(); }

/// Calls visit(word_index) for every length-n word of L(X), in lexicographic
/// order. The index is the word read as a base-2 number (n <= 63).
template <typename Visit>
void for_each_language_word(const SoficShift& x, unsigned n, Visit&& visit) {
    const Dfa& d = x.dfa();
    std::function<void(State, unsigned, std::uint64_t)> walk = [&](State s, unsigned depth, std::uint64_t idx) {
        if (depth == n) {
            visit(idx);
            return;
        }
        for (Bit b = 0; b < 2; ++b) {
            const State t = d.next[s][b];
            if (x.live(t))
                walk(t, depth + 1, (idx << 1) | b);
        }
    };
    if (x.live(d.initial))
        walk(d.initial, 0, 0);
}

inline std::vector<Word> language_words(const SoficShift& x, unsigned n) {
    std::vector<Word> out;
    for_each_language_word(x, n, [&](std::uint64_t idx) { out.push_back(Word::from_index(idx, n)); });
    return out;
}

/// Orbits ^inf u ^inf in X with |u| <= p, as canonical (Lyndon) representatives,
/// ordered by length then lexicographically.
inline std::vector<PeriodicPoint> periodic_points(const SoficShift& x, std::size_t p) {
    if (p < 1)
        throw std::invalid_argument("period bound must be >= 1");
    std::vector<PeriodicPoint> out;
    for (auto& u : lyndon_words(p)) {
        PeriodicPoint pt(std::move(u));
        if (x.contains(pt))
            out.push_back(std::move(pt));
    }
    return out;
}

} // namespace vnreg

#endif
