#ifndef VNREG_PREIMAGES_HPP
#define VNREG_PREIMAGES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bits.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"
#include "sofic.hpp"

namespace vnreg {

/// All y with |y| = |u| and apply_periodic(f, y) = u (exact alignment),
/// in lexicographic order.
inline std::vector<Word> same_period_preimages(const LocalRule& f, const Word& u) {
    if (u.empty())
        throw std::invalid_argument("periodic word must be nonempty");
    const std::size_t n = u.size();
    const std::size_t r = f.radius();
    const std::size_t width = 2 * r + 1;
    std::vector<Word> out;
    Word y(std::vector<Bit>(n, 0));
    auto window_at = [&](std::size_t center) {
        std::uint64_t w = 0;
        for (std::size_t t = 0; t < width; ++t)
            w = (w << 1) | y[(center + n * (r + 1) - r + t) % n];
        return w;
    };
    // y[i] completes the non-wrapping window centered at i - r
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            for (std::size_t c = 0; c < n; ++c) {
                const bool wraps = c < r || c + r >= n;
                if (wraps && f.at(window_at(c)) != u[c])
                    return;
            }
            out.push_back(y);
            return;
        }
        for (Bit b = 0; b < 2; ++b) {
            y[i] = b;
            if (i >= 2 * r && i < n) {
                const std::size_t c = i - r;
                if (c + r < n) {
                    std::uint64_t w = 0;
                    for (std::size_t t = 0; t < width; ++t)
                        w = (w << 1) | y[c - r + t];
                    if (f.at(w) != u[c])
                        continue;
                }
            }
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

/// First canonical u (length, then lex) with |u| <= pmax, ^inf u ^inf in the
/// image, and no same-period preimage. nullopt means the weak condition holds.
inline std::optional<Word> weak_ppc_failure(const LocalRule& f, const SoficShift& image_of_f, std::size_t pmax) {
    if (pmax < 1)
        throw std::invalid_argument("pmax must be >= 1");
    for (const auto& pt : periodic_points(image_of_f, pmax))
        if (same_period_preimages(f, pt.canonical_form()).empty())
            return pt.canonical_form();
    return std::nullopt;
}

inline std::optional<Word> weak_ppc_failure(const LocalRule& f, std::size_t pmax) {
    return weak_ppc_failure(f, image(f), pmax);
}

} // namespace vnreg

#endif
