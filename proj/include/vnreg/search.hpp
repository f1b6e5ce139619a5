#ifndef VNREG_SEARCH_HPP
#define VNREG_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "forcing.hpp"
#include "local_rule.hpp"
#include "sofic.hpp"

namespace vnreg {

struct NotFound {};

using SearchResult = std::variant<LocalRule, NotFound, ForcingContradiction, WeakPpcFailure>;

struct SearchAllResult {
    std::vector<LocalRule> inverses;  // distinct on image windows, in search order
    bool truncated = false;
    std::optional<Certificate> refutation;  // forcing or weak-ppc failure
};

namespace detail {

/// Backtracking completion of a forced partial rule into radius-r right
/// inverses of f. Variables are the unforced windows occurring in the image,
/// in lexicographic order with 0 tried first; windows outside the image stay 0.
/// A branch dies as soon as some image word of length 2(r + r_f) + 1 whose
/// windows are all assigned fails f(g(z)) = center(z).
template <typename OnSolution>
void complete_inverse(const LocalRule& f, const SoficShift& image_of_f, const PartialLocalRule& forced,
                      OnSolution&& on_solution) {
    const unsigned r = forced.radius();
    const unsigned rf = f.radius();
    const unsigned gw = 2 * r + 1;
    const std::uint64_t gmask = low_mask(gw);

    std::vector<std::int8_t> value(std::size_t{1} << gw, 0);
    std::vector<std::int64_t> var_of(value.size(), -1);
    std::vector<std::uint64_t> vars;
    for_each_language_word(image_of_f, gw, [&](std::uint64_t w) {
        if (forced.known(w))
            return;
        var_of[w] = static_cast<std::int64_t>(vars.size());
        vars.push_back(w);
    });
    for (std::uint64_t w = 0; w < value.size(); ++w)
        if (forced.known(w))
            value[w] = forced.at(w);

    struct Constraint {
        std::vector<std::uint64_t> windows;
        Bit center;
    };
    std::vector<std::vector<Constraint>> due(vars.size() + 1);
    const unsigned zw = 2 * (r + rf) + 1;
    for_each_language_word(image_of_f, zw, [&](std::uint64_t z) {
        Constraint c;
        c.center = static_cast<Bit>((z >> (r + rf)) & 1U);
        std::int64_t last = -1;
        for (unsigned t = 0; t < 2 * rf + 1; ++t) {
            const std::uint64_t w = (z >> (2 * rf - t)) & gmask;
            c.windows.push_back(w);
            last = std::max(last, var_of[w]);
        }
        due[static_cast<std::size_t>(last + 1)].push_back(std::move(c));
    });
    auto holds = [&](const Constraint& c) {
        std::uint64_t inner = 0;
        for (auto w : c.windows)
            inner = (inner << 1) | static_cast<std::uint64_t>(value[w]);
        return f.at(inner) == c.center;
    };
    for (const auto& c : due[0])
        if (!holds(c))
            return;

    auto emit = [&] {
        LocalRule g(r);
        for (std::uint64_t w = 0; w < value.size(); ++w)
            g.set(w, value[w] == 1);
        return on_solution(std::move(g));
    };
    // returns false to stop
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == vars.size())
            return emit();
        for (std::int8_t b = 0; b < 2; ++b) {
            value[vars[k]] = b;
            bool ok = true;
            for (const auto& c : due[k + 1])
                if (!holds(c)) {
                    ok = false;
                    break;
                }
            if (ok && !self(self, k + 1))
                return false;
        }
        value[vars[k]] = 0;
        return true;
    };
    dfs(dfs, 0);
}

} // namespace detail

/// Radius-r weak inverse of f, or the reason none exists / none was found.
inline SearchResult search_inverse(const LocalRule& f, const SoficShift& image_of_f, unsigned r, std::size_t pmax) {
    auto forced = force_partial_rule(f, image_of_f, r, pmax);
    if (auto* c = std::get_if<ForcingContradiction>(&forced))
        return *c;
    if (auto* c = std::get_if<WeakPpcFailure>(&forced))
        return *c;
    std::optional<LocalRule> found;
    detail::complete_inverse(f, image_of_f, std::get<PartialLocalRule>(forced), [&](LocalRule g) {
        found = std::move(g);
        return false;
    });
    if (found)
        return *found;
    return NotFound{};
}

inline SearchResult search_inverse(const LocalRule& f, unsigned r, std::size_t pmax) {
    return search_inverse(f, image(f), r, pmax);
}

/// Every radius-r right inverse, modulo windows outside the image (up to `limit`).
inline SearchAllResult search_all_inverses(const LocalRule& f, const SoficShift& image_of_f, unsigned r,
                                           std::size_t pmax, std::size_t limit = 1024) {
    SearchAllResult out;
    auto forced = force_partial_rule(f, image_of_f, r, pmax);
    if (auto* c = std::get_if<ForcingContradiction>(&forced)) {
        out.refutation = *c;
        return out;
    }
    if (auto* c = std::get_if<WeakPpcFailure>(&forced)) {
        out.refutation = *c;
        return out;
    }
    detail::complete_inverse(f, image_of_f, std::get<PartialLocalRule>(forced), [&](LocalRule g) {
        if (out.inverses.size() >= limit) {
            out.truncated = true;
            return false;
        }
        out.inverses.push_back(std::move(g));
        return true;
    });
    return out;
}

} // namespace vnreg

#endif
