#ifndef VNREG_ASYMPTOTIC_HPP
#define VNREG_ASYMPTOTIC_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bits.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"

namespace vnreg {

// Preimages of eventually periodic points, as walks in the de Bruijn graph of f.
//
// A walk state is the 2r cells y[j-r .. j+r-1] just before the output x[j] is
// emitted; reading y[j+r] emits f(y[j-r .. j+r]) and drops the oldest cell.
// Phases count emitted positions modulo the tail period, so a preimage that
// is left-asymptotic to ^inf U (aligned like u) and right-asymptotic to V ^inf
// (aligned like v) is exactly a walk from the U-cycle to the V-cycle.
namespace asymptotic {

using StateSet = std::vector<bool>;

inline std::uint64_t cycle_state(const Word& period, std::size_t phase, unsigned radius) {
    const std::size_t n = period.size();
    std::uint64_t s = 0;
    for (std::size_t t = 0; t < 2 * radius; ++t)
        s = (s << 1) | period[(phase + n * (radius + 1) - radius + t) % n];
    return s;
}

/// States possible right before emitting x[0], for preimages that agree with
/// ^inf U far to the left while x is ^inf u on negative coordinates.
inline StateSet left_frontier(const LocalRule& f, const Word& u, const Word& big_u) {
    const unsigned r = f.radius();
    const std::size_t states = std::size_t{1} << (2 * r);
    const std::uint64_t mask = low_mask(2 * r);
    const std::size_t n = u.size();
    std::vector<bool> seen(states * n, false);
    std::vector<std::pair<std::uint64_t, std::size_t>> stack;
    for (std::size_t ph = 0; ph < n; ++ph) {
        const std::uint64_t s = cycle_state(big_u, ph, r);
        if (!seen[s * n + ph]) {
            seen[s * n + ph] = true;
            stack.emplace_back(s, ph);
        }
    }
    while (!stack.empty()) {
        const auto [s, ph] = stack.back();
        stack.pop_back();
        for (Bit b = 0; b < 2; ++b) {
            const std::uint64_t w = (s << 1) | b;
            if (f.at(w) != u[ph])
                continue;
            const std::uint64_t t = w & mask;
            const std::size_t nph = (ph + 1) % n;
            if (!seen[t * n + nph]) {
                seen[t * n + nph] = true;
                stack.emplace_back(t, nph);
            }
        }
    }
    StateSet out(states, false);
    for (std::size_t s = 0; s < states; ++s)
        out[s] = seen[s * n];
    return out;
}

/// States at right phase 0 (right before emitting x[|w|]) from which the walk
/// can emit v forever and settle on the V-cycle.
inline StateSet right_acceptors(const LocalRule& f, const Word& v, const Word& big_v) {
    const unsigned r = f.radius();
    const std::size_t states = std::size_t{1} << (2 * r);
    const std::uint64_t mask = low_mask(2 * r);
    const std::size_t n = v.size();
    std::vector<std::vector<std::size_t>> rev(states * n);
    for (std::uint64_t s = 0; s < states; ++s)
        for (std::size_t ph = 0; ph < n; ++ph)
            for (Bit b = 0; b < 2; ++b) {
                const std::uint64_t w = (s << 1) | b;
                if (f.at(w) != v[ph])
                    continue;
                rev[(w & mask) * n + (ph + 1) % n].push_back(s * n + ph);
            }
    std::vector<bool> good(states * n, false);
    std::vector<std::size_t> stack;
    for (std::size_t ph = 0; ph < n; ++ph) {
        const std::size_t node = cycle_state(big_v, ph, r) * n + ph;
        if (!good[node]) {
            good[node] = true;
            stack.push_back(node);
        }
    }
    while (!stack.empty()) {
        const std::size_t node = stack.back();
        stack.pop_back();
        for (std::size_t p : rev[node])
            if (!good[p]) {
                good[p] = true;
                stack.push_back(p);
            }
    }
    StateSet out(states, false);
    for (std::size_t s = 0; s < states; ++s)
        out[s] = good[s * n];
    return out;
}

inline StateSet step(const LocalRule& f, const StateSet& from, Bit emitted) {
    const std::uint64_t mask = low_mask(2 * f.radius());
    StateSet to(from.size(), false);
    for (std::uint64_t s = 0; s < from.size(); ++s) {
        if (!from[s])
            continue;
        for (Bit b = 0; b < 2; ++b) {
            const std::uint64_t w = (s << 1) | b;
            if (f.at(w) == emitted)
                to[w & mask] = true;
        }
    }
    return to;
}

inline bool meets(const StateSet& a, const StateSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return true;
    return false;
}

} // namespace asymptotic

inline void require_aligned_preimage(const LocalRule& f, const Word& period, const Word& pre, const char* what) {
    if (pre.size() != period.size())
        throw std::invalid_argument(std::string(what) + ": preimage length differs from period");
    if (apply_periodic(f, pre) != period)
        throw std::invalid_argument(std::string(what) + ": f(" + pre.str() + ") is not " + period.str());
}

/// Does f have a preimage of x = ^inf u . w v ^inf of the form
/// ^inf U w' . w'' w''' V ^inf with |u| | |w'|, |v| | |w'''| and |w''| = |w|?
inline bool asymptotic_preimage_exists(const LocalRule& f, const EventuallyPeriodicPoint& x, const Word& big_u,
                                       const Word& big_v) {
    require_aligned_preimage(f, x.left, big_u, "left tail");
    require_aligned_preimage(f, x.right, big_v, "right tail");
    auto frontier = asymptotic::left_frontier(f, x.left, big_u);
    for (Bit b : x.middle)
        frontier = asymptotic::step(f, frontier, b);
    return asymptotic::meets(frontier, asymptotic::right_acceptors(f, x.right, big_v));
}

} // namespace vnreg

#endif
