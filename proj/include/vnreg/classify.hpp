#ifndef VNREG_CLASSIFY_HPP
#define VNREG_CLASSIFY_HPP

#include <functional>
#include <string>
#include <variant>

#include "asymptotic.hpp"
#include "certificate.hpp"
#include "forcing.hpp"
#include "injectivity.hpp"
#include "preimages.hpp"
#include "search.hpp"
#include "sofic.hpp"
#include "spp.hpp"
#include "weak_inverse.hpp"

namespace vnreg {

struct ClassifyOptions {
    std::size_t pmax = 6;
    std::size_t lmax = 8;
    unsigned rmax = 2;
};

/// Decision ladder; the first conclusive step wins:
///  1. surjective: regular iff injective
///  2. image not of finite type: not regular
///  3. weak periodic point condition fails: not regular
///  4. strong p-periodic condition fails for some p <= pmax: not regular
///  5. a weak inverse of radius <= rmax is found: regular
inline Verdict classify(const LocalRule& f, const ClassifyOptions& opt = {}) {
    const SoficShift img = image(f);
    auto search_up_to = [&](unsigned rmax) -> std::optional<LocalRule> {
        for (unsigned r = 0; r <= rmax; ++r) {
            auto found = search_inverse(f, img, r, opt.pmax);
            if (auto* g = std::get_if<LocalRule>(&found))
                return *g;
        }
        return std::nullopt;
    };

    if (is_full_shift(img)) {
        auto inj = check_injectivity(f);
        if (!inj.injective)
            return NonRegular{SurjectiveNotInjective{inj.witness->first, inj.witness->second}};
        if (auto g = search_up_to(opt.rmax))
            return Regular{*g};
        return Unknown{opt.pmax, opt.lmax, opt.rmax, "reversible, but no inverse of radius <= rmax found"};
    }
    if (!is_sft(img))
        return NonRegular{ImageNotSft{}};
    if (auto u = weak_ppc_failure(f, img, opt.pmax))
        return NonRegular{WeakPpcFailure{*u}};
    for (std::size_t p = 1; p <= opt.pmax; ++p) {
        auto spp = spp_check(f, img, p, opt.lmax, 1);
        if (spp.survivors.empty())
            return NonRegular{*spp.certificate};
    }
    if (auto g = search_up_to(opt.rmax))
        return Regular{*g};
    return Unknown{opt.pmax, opt.lmax, opt.rmax, "search bounds exhausted"};
}

namespace detail {

// Every full assignment is covered by a leaf that is a prefix of it.
inline bool leaves_cover(const std::vector<std::vector<Word>>& domains, const std::vector<SppLeaf>& leaves,
                         GAssignment& prefix, const std::vector<Word>& points) {
    for (const auto& leaf : leaves)
        if (leaf.assignment == prefix)
            return true;
    const std::size_t k = prefix.size();
    if (k == points.size())
        return false;
    for (const auto& val : domains[k]) {
        prefix.emplace_back(points[k], val);
        const bool ok = leaves_cover(domains, leaves, prefix, points);
        prefix.pop_back();
        if (!ok)
            return false;
    }
    return true;
}

} // namespace detail

/// Re-checks a non-regularity certificate against f from scratch.
inline bool replay(const LocalRule& f, const Certificate& cert) {
    struct Visitor {
        const LocalRule& f;

        bool operator()(const ImageNotSft&) const { return !is_sft(image(f)); }

        bool operator()(const WeakPpcFailure& c) const {
            if (c.u.empty() || !image(f).contains(PeriodicPoint(c.u)))
                return false;
            for (std::size_t k = 0; k < c.u.size(); ++k)
                if (!same_period_preimages(f, c.u.rotated(k)).empty())
                    return false;
            return true;
        }

        bool operator()(const SppFailure& c) const {
            const SoficShift img = image(f);
            for (const auto& leaf : c.leaves) {
                if (leaf.w.size() > c.lmax || leaf.u.size() > c.p || leaf.v.size() > c.p)
                    return false;
                const EventuallyPeriodicPoint x(leaf.u, leaf.w, leaf.v);
                if (!img.contains(x))
                    return false;
                const Word* big_u = nullptr;
                const Word* big_v = nullptr;
                for (const auto& [pt, pre] : leaf.assignment) {
                    if (pt == leaf.u)
                        big_u = &pre;
                    if (pt == leaf.v)
                        big_v = &pre;
                }
                if (!big_u || !big_v)
                    return false;
                if (apply_periodic(f, *big_u) != leaf.u || apply_periodic(f, *big_v) != leaf.v)
                    return false;
                if (asymptotic_preimage_exists(f, x, *big_u, *big_v))
                    return false;
            }
            std::vector<Word> points;
            std::vector<std::vector<Word>> domains;
            for (const auto& pt : periodic_points(img, c.p)) {
                points.push_back(pt.canonical_form());
                domains.push_back(same_period_preimages(f, points.back()));
            }
            GAssignment prefix;
            return detail::leaves_cover(domains, c.leaves, prefix, points);
        }

        bool operator()(const SurjectiveNotInjective& c) const {
            return is_surjective(f) && !same_configuration(c.x, c.y) && same_image(f, c.x, c.y);
        }

        bool operator()(const ForcingContradiction& c) const {
            if (c.first.bit == c.second.bit)
                return false;
            const SoficShift img = image(f);
            for (const auto* src : {&c.first, &c.second}) {
                if (!img.contains(PeriodicPoint(src->u)) || src->position >= src->u.size())
                    return false;
                if (periodic_window(src->u, src->position, c.radius) != c.window.index())
                    return false;
                const auto pre = same_period_preimages(f, src->u);
                const auto agreed = agreed_bits(pre, src->u.size());
                if (pre.empty() || agreed[src->position] != src->bit)
                    return false;
            }
            return true;
        }
    };
    return std::visit(Visitor{f}, cert);
}

inline bool replay(const LocalRule& f, const Verdict& v) {
    if (auto* reg = std::get_if<Regular>(&v))
        return verify_weak_inverse(f, reg->witness);
    if (auto* non = std::get_if<NonRegular>(&v))
        return replay(f, non->certificate);
    return true;
}

} // namespace vnreg

#endif
