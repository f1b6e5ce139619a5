#ifndef VNREG_INJECTIVITY_HPP
#define VNREG_INJECTIVITY_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "local_rule.hpp"
#include "periodic.hpp"
#include "sofic.hpp"

namespace vnreg {

inline bool is_surjective(const LocalRule& f) { return is_full_shift(image(f)); }

struct InjectivityResult {
    bool injective = true;
    // distinct configurations with equal images when not injective
    std::optional<std::pair<EventuallyPeriodicPoint, EventuallyPeriodicPoint>> witness;
};

namespace detail {

// Pair graph: node (a, b) of 2r-cell words, edge on cells (x, y) when
// f(a x) == f(b y). Node id = a * states + b; edge label = 2x + y.
struct PairGraph {
    std::size_t states = 0;
    std::vector<std::vector<std::pair<std::size_t, unsigned>>> out;
    std::vector<std::vector<std::size_t>> in;

    explicit PairGraph(const LocalRule& f) {
        const unsigned r = f.radius();
        states = std::size_t{1} << (2 * r);
        const std::uint64_t mask = low_mask(2 * r);
        out.resize(states * states);
        in.resize(states * states);
        for (std::uint64_t a = 0; a < states; ++a)
            for (std::uint64_t b = 0; b < states; ++b)
                for (unsigned x = 0; x < 2; ++x)
                    for (unsigned y = 0; y < 2; ++y) {
                        const std::uint64_t wa = (a << 1) | x;
                        const std::uint64_t wb = (b << 1) | y;
                        if (f(wa) != f(wb))
                            continue;
                        const std::size_t from = a * states + b;
                        const std::size_t to = (wa & mask) * states + (wb & mask);
                        out[from].emplace_back(to, 2 * x + y);
                        in[to].push_back(from);
                    }
    }

    bool diagonal(std::size_t node) const { return node / states == node % states; }
    std::size_t size() const { return out.size(); }
};

// Shortest path from `from` to `to` (length >= 1), as edge labels.
inline std::optional<std::vector<unsigned>> shortest_walk(const PairGraph& g, std::size_t from, std::size_t to) {
    std::vector<std::int64_t> parent(g.size(), -1);
    std::vector<unsigned> label(g.size(), 0);
    std::deque<std::size_t> queue;
    for (auto [t, l] : g.out[from])
        if (parent[t] < 0) {
            parent[t] = static_cast<std::int64_t>(from);
            label[t] = l;
            queue.push_back(t);
        }
    while (!queue.empty() && parent[to] < 0) {
        const std::size_t s = queue.front();
        queue.pop_front();
        for (auto [t, l] : g.out[s])
            if (parent[t] < 0) {
                parent[t] = static_cast<std::int64_t>(s);
                label[t] = l;
                queue.push_back(t);
            }
    }
    if (parent[to] < 0)
        return std::nullopt;
    std::vector<unsigned> labels;
    std::size_t cur = to;
    do {
        labels.push_back(label[cur]);
        cur = static_cast<std::size_t>(parent[cur]);
    } while (cur != from || labels.size() == 0);
    // walk may revisit `from` only at its end; BFS parents guarantee a simple chain
    std::reverse(labels.begin(), labels.end());
    return labels;
}

inline std::pair<Word, Word> split_labels(const std::vector<unsigned>& labels) {
    Word x, y;
    for (unsigned l : labels) {
        x.push_back(static_cast<Bit>(l >> 1));
        y.push_back(static_cast<Bit>(l & 1U));
    }
    return {x, y};
}

} // namespace detail

/// Injectivity on the full shift via the pair graph: f is injective iff no
/// off-diagonal node lies on a bi-infinite walk. A non-injective answer
/// carries a witness pair, periodic when possible.
inline InjectivityResult check_injectivity(const LocalRule& f) {
    // radius 0 has a single (diagonal) node; the padded rule is the same CA
    const LocalRule rule = f.radius() == 0 ? pad_radius(f, 1) : f;
    const detail::PairGraph g(rule);
    const std::size_t n = g.size();

    // nodes with an infinite backward walk / infinite forward walk
    auto infinite_side = [&](bool forward) {
        std::vector<std::size_t> degree(n);
        for (std::size_t v = 0; v < n; ++v)
            degree[v] = forward ? g.out[v].size() : g.in[v].size();
        std::vector<bool> alive(n, true);
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 0)
                stack.push_back(v);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            if (!alive[v])
                continue;
            alive[v] = false;
            if (forward) {
                for (std::size_t p : g.in[v])
                    if (alive[p] && --degree[p] == 0)
                        stack.push_back(p);
            } else {
                for (auto [t, l] : g.out[v])
                    if (alive[t] && --degree[t] == 0)
                        stack.push_back(t);
            }
        }
        return alive;
    };
    const auto has_future = infinite_side(true);
    const auto has_past = infinite_side(false);

    InjectivityResult res;
    std::vector<std::size_t> bad;
    for (std::size_t v = 0; v < n; ++v)
        if (!g.diagonal(v) && has_future[v] && has_past[v])
            bad.push_back(v);
    if (bad.empty())
        return res;
    res.injective = false;

    // shortest cycle through a bad node gives a periodic witness
    std::optional<std::vector<unsigned>> best;
    for (std::size_t v : bad) {
        auto cyc = detail::shortest_walk(g, v, v);
        if (cyc && (!best || cyc->size() < best->size()))
            best = std::move(cyc);
    }
    if (best) {
        auto [x, y] = detail::split_labels(*best);
        res.witness.emplace(EventuallyPeriodicPoint(x, {}, x), EventuallyPeriodicPoint(y, {}, y));
        return res;
    }

    // otherwise: cycle -> bad node -> cycle
    const std::size_t v = bad.front();
    auto on_cycle = [&](std::size_t s) { return detail::shortest_walk(g, s, s).has_value(); };
    std::optional<std::size_t> src, dst;
    for (std::size_t s = 0; s < n && !src; ++s)
        if (has_past[s] && on_cycle(s) && detail::shortest_walk(g, s, v))
            src = s;
    for (std::size_t s = 0; s < n && !dst; ++s)
        if (has_future[s] && on_cycle(s) && detail::shortest_walk(g, v, s))
            dst = s;
    const auto loop_in = *detail::shortest_walk(g, *src, *src);
    const auto to_bad = *detail::shortest_walk(g, *src, v);
    const auto from_bad = *detail::shortest_walk(g, v, *dst);
    const auto loop_out = *detail::shortest_walk(g, *dst, *dst);
    std::vector<unsigned> mid = to_bad;
    mid.insert(mid.end(), from_bad.begin(), from_bad.end());
    auto [lx, ly] = detail::split_labels(loop_in);
    auto [mx, my] = detail::split_labels(mid);
    auto [rx, ry] = detail::split_labels(loop_out);
    res.witness.emplace(EventuallyPeriodicPoint(lx, mx, rx), EventuallyPeriodicPoint(ly, my, ry));
    return res;
}

inline bool is_injective(const LocalRule& f) { return check_injectivity(f).injective; }

} // namespace vnreg

#endif
