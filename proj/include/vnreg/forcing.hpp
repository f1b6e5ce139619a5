#ifndef VNREG_FORCING_HPP
#define VNREG_FORCING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "certificate.hpp"
#include "preimages.hpp"
#include "sofic.hpp"

namespace vnreg {

/// Local rule table over {0, 1, unknown}.
class PartialLocalRule {
public:
    static constexpr std::int8_t kUnknown = -1;

    explicit PartialLocalRule(unsigned radius)
        : radius_(radius), cells_(std::size_t{1} << (2 * radius + 1), kUnknown),
          sources_(cells_.size()) {}

    unsigned radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return cells_.size(); }
    std::int8_t at(std::uint64_t window) const { return cells_[window]; }
    bool known(std::uint64_t window) const { return cells_[window] != kUnknown; }
    const std::optional<ForcingSource>& source(std::uint64_t window) const { return sources_[window]; }

    std::size_t known_count() const {
        std::size_t c = 0;
        for (auto v : cells_)
            c += v != kUnknown;
        return c;
    }

    /// Refines unknown -> bit. A clash with an earlier bit is returned, not applied.
    std::optional<ForcingContradiction> force(std::uint64_t window, const ForcingSource& src) {
        if (cells_[window] == kUnknown) {
            cells_[window] = static_cast<std::int8_t>(src.bit);
            sources_[window] = src;
            return std::nullopt;
        }
        if (cells_[window] == static_cast<std::int8_t>(src.bit))
            return std::nullopt;
        return ForcingContradiction{radius_, Word::from_index(window, 2 * radius_ + 1), *sources_[window], src};
    }

private:
    unsigned radius_;
    std::vector<std::int8_t> cells_;
    std::vector<std::optional<ForcingSource>> sources_;
};

using ForcingResult = std::variant<PartialLocalRule, ForcingContradiction, WeakPpcFailure>;

// Window of radius r centered at cell i of ^inf u ^inf.
inline std::uint64_t periodic_window(const Word& u, std::size_t i, unsigned r) {
    const std::size_t n = u.size();
    std::uint64_t w = 0;
    for (std::size_t t = 0; t < 2 * r + 1; ++t)
        w = (w << 1) | u[(i + n * (r + 1) - r + t) % n];
    return w;
}

/// Cells of ^inf u ^inf where all same-period preimages of u agree.
inline std::vector<std::optional<Bit>> agreed_bits(const std::vector<Word>& preimages, std::size_t n) {
    std::vector<std::optional<Bit>> out(n);
    if (preimages.empty())
        return out;
    for (std::size_t i = 0; i < n; ++i) {
        bool same = true;
        for (const auto& y : preimages)
            same = same && y[i] == preimages.front()[i];
        if (same)
            out[i] = preimages.front()[i];
    }
    return out;
}

/// Periodic-point forcing for radius-r right inverses of f.
///
/// A right inverse maps ^inf u ^inf to an exactly aligned preimage of the same
/// period, so a cell on which all such preimages agree pins the inverse's
/// output on the corresponding window of ^inf u ^inf. Points are visited by
/// period, then lexicographically. Two different pinned bits on one window
/// prove that no radius-r weak inverse exists.
inline ForcingResult force_partial_rule(const LocalRule& f, const SoficShift& image_of_f, unsigned r,
                                        std::size_t pmax) {
    if (pmax < 1)
        throw std::invalid_argument("pmax must be >= 1");
    PartialLocalRule partial(r);
    for (const auto& pt : periodic_points(image_of_f, pmax)) {
        const Word& u = pt.canonical_form();
        const auto pre = same_period_preimages(f, u);
        if (pre.empty())
            return WeakPpcFailure{u};
        const auto agreed = agreed_bits(pre, u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!agreed[i])
                continue;
            if (auto clash = partial.force(periodic_window(u, i, r), ForcingSource{u, i, *agreed[i]}))
                return *clash;
        }
    }
    return partial;
}

inline ForcingResult force_partial_rule(const LocalRule& f, unsigned r, std::size_t pmax) {
    return force_partial_rule(f, image(f), r, pmax);
}

} // namespace vnreg

#endif
