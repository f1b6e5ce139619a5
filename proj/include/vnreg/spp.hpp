#ifndef VNREG_SPP_HPP
#define VNREG_SPP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "asymptotic.hpp"
#include "certificate.hpp"
#include "preimages.hpp"
#include "sofic.hpp"

namespace vnreg {

struct SppResult {
    std::vector<Word> points;                // canonical periodic points of the image, |u| <= p
    std::vector<std::vector<Word>> domains;  // same-period preimages of each point
    std::vector<GAssignment> survivors;
    bool truncated = false;                  // survivor enumeration hit the limit
    std::optional<Certificate> certificate;  // set iff no survivors
};

namespace detail {

// Shortlex order on (u, w, v) triples.
inline bool triple_less(const Word& u1, const Word& w1, const Word& v1, const Word& u2, const Word& w2,
                        const Word& v2) {
    ShortLex sl;
    if (u1 != u2)
        return sl(u1, u2);
    if (w1 != w2)
        return sl(w1, w2);
    return sl(v1, v2);
}

} // namespace detail

/// Bounded strong p-periodic point check.
///
/// Every G on the canonical periodic points of f's image (|u| <= p) is tested
/// against all ^inf u . w v ^inf in the image with |w| <= lmax. A G is
/// eliminated when some such point has no preimage asymptotic to G(u) on the
/// left and G(v) on the right with the required phases. An empty survivor set
/// refutes split epicness; survivors are only inconclusive at this bound.
inline SppResult spp_check(const LocalRule& f, const SoficShift& image_of_f, std::size_t p, std::size_t lmax,
                           std::size_t survivor_limit = 4096) {
    if (p < 1)
        throw std::invalid_argument("p must be >= 1");
    SppResult res;
    for (const auto& pt : periodic_points(image_of_f, p))
        res.points.push_back(pt.canonical_form());
    const std::size_t n = res.points.size();
    for (const auto& u : res.points) {
        res.domains.push_back(same_period_preimages(f, u));
        if (res.domains.back().empty()) {
            res.certificate = WeakPpcFailure{u};
            return res;
        }
    }

    std::vector<Word> middles;
    for (std::size_t len = 0; len <= lmax; ++len)
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx)
            middles.push_back(Word::from_index(idx, len));

    // member[i][j][k]: ^inf u_i . w_k u_j ^inf lies in the image
    std::vector<std::vector<std::vector<bool>>> member(n, std::vector<std::vector<bool>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            member[i][j].resize(middles.size());
            for (std::size_t k = 0; k < middles.size(); ++k)
                member[i][j][k] = image_of_f.contains(EventuallyPeriodicPoint(res.points[i], middles[k], res.points[j]));
        }

    // frontier after each middle word, per (point, preimage choice)
    std::vector<std::vector<std::vector<asymptotic::StateSet>>> frontier(n);
    std::vector<std::vector<asymptotic::StateSet>> acceptors(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& big_u : res.domains[i]) {
            const auto start = asymptotic::left_frontier(f, res.points[i], big_u);
            std::vector<asymptotic::StateSet> per_word;
            per_word.reserve(middles.size());
            for (const auto& w : middles) {
                auto s = start;
                for (Bit b : w)
                    s = asymptotic::step(f, s, b);
                per_word.push_back(std::move(s));
            }
            frontier[i].push_back(std::move(per_word));
            acceptors[i].push_back(asymptotic::right_acceptors(f, res.points[i], big_u));
        }

    // fail[i][a][j][b]: index of the first failing middle word, or -1
    std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> fail(n);
    for (std::size_t i = 0; i < n; ++i) {
        fail[i].resize(res.domains[i].size());
        for (std::size_t a = 0; a < res.domains[i].size(); ++a) {
            fail[i][a].resize(n);
            for (std::size_t j = 0; j < n; ++j) {
                fail[i][a][j].assign(res.domains[j].size(), -1);
                for (std::size_t b = 0; b < res.domains[j].size(); ++b)
                    for (std::size_t k = 0; k < middles.size(); ++k)
                        if (member[i][j][k] && !asymptotic::meets(frontier[i][a][k], acceptors[j][b])) {
                            fail[i][a][j][b] = static_cast<std::int64_t>(k);
                            break;
                        }
            }
        }
    }

    SppFailure cert{p, lmax, {}};
    std::vector<std::size_t> choice(n, 0);
    auto assignment_prefix = [&](std::size_t depth) {
        GAssignment g;
        for (std::size_t m = 0; m < depth; ++m)
            g.emplace_back(res.points[m], res.domains[m][choice[m]]);
        return g;
    };
    auto search = [&](auto&& self, std::size_t k) -> void {
        if (res.truncated)
            return;
        if (k == n) {
            if (res.survivors.size() >= survivor_limit) {
                res.truncated = true;
                return;
            }
            res.survivors.push_back(assignment_prefix(n));
            return;
        }
        for (std::size_t a = 0; a < res.domains[k].size(); ++a) {
            choice[k] = a;
            // smallest failing (u, w, v) among pairs that involve k and earlier points
            std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> worst;
            auto consider = [&](std::size_t i, std::size_t j) {
                const std::int64_t wk = fail[i][choice[i]][j][choice[j]];
                if (wk < 0)
                    return;
                const auto cand = std::make_tuple(i, static_cast<std::size_t>(wk), j);
                if (!worst || detail::triple_less(res.points[i], middles[std::get<1>(cand)], res.points[j],
                                                  res.points[std::get<0>(*worst)], middles[std::get<1>(*worst)],
                                                  res.points[std::get<2>(*worst)]))
                    worst = cand;
            };
            for (std::size_t m = 0; m <= k; ++m) {
                consider(m, k);
                if (m != k)
                    consider(k, m);
            }
            if (worst) {
                const auto [i, wk, j] = *worst;
                cert.leaves.push_back({assignment_prefix(k + 1), res.points[i], middles[wk], res.points[j]});
                continue;
            }
            self(self, k + 1);
        }
    };
    search(search, 0);
    if (res.survivors.empty())
        res.certificate = std::move(cert);
    return res;
}

inline SppResult spp_check(const LocalRule& f, std::size_t p, std::size_t lmax, std::size_t survivor_limit = 4096) {
    return spp_check(f, image(f), p, lmax, survivor_limit);
}

} // namespace vnreg

#endif
