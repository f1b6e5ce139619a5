#ifndef VNREG_REPRODUCE_HPP
#define VNREG_REPRODUCE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"
#include "ruledsl.hpp"
#include "serialize.hpp"

namespace vnreg {

struct ReproduceOptions {
    std::filesystem::path figures_dir;
    ClassifyOptions bounds{};
    std::size_t eca57_pmax = 20;  // forcing at radius 3; the slowest step
    bool include_eca57_forcing = true;
};

struct ReproduceReport {
    json::json document;
    bool ok = true;
    std::vector<std::string> failures;
};

namespace detail {

inline json::json forcing_json(const ForcingResult& r) {
    if (auto* c = std::get_if<ForcingContradiction>(&r))
        return {{"outcome", "contradiction"}, {"certificate", json::to_json(Certificate{*c})}};
    if (auto* c = std::get_if<WeakPpcFailure>(&r))
        return {{"outcome", "weak-ppc-failure"}, {"certificate", json::to_json(Certificate{*c})}};
    const auto& p = std::get<PartialLocalRule>(r);
    return {{"outcome", "consistent"}, {"forced_windows", p.known_count()}, {"windows", p.size()}};
}

} // namespace detail

/// Recomputes every catalog claim. Known inverses are validated, never trusted.
/// The report is deterministic: no timings, stable key order.
inline ReproduceReport reproduce(const ReproduceOptions& opt) {
    ReproduceReport rep;
    auto check = [&](bool cond, const std::string& what) {
        if (!cond) {
            rep.ok = false;
            rep.failures.push_back(what);
        }
        return cond;
    };

    json::json entries = json::json::array();
    for (const auto& e : catalog()) {
        const std::string tag = "ECA " + std::to_string(e.eca_number);
        const LocalRule f = e.rule();
        const SoficShift img = image(f);
        json::json j{{"eca", e.eca_number}, {"expected", to_string(e.expected_verdict)}};

        const auto forbidden = minimal_forbidden_words(img);
        const ImageKind kind = is_full_shift(img) ? ImageKind::FullShift
                               : forbidden        ? ImageKind::Sft
                                                  : ImageKind::ProperSofic;
        j["image"] = {{"kind", to_string(kind)},
                      {"dfa_states", img.dfa().size()},
                      {"forbidden", forbidden ? json::words_json(*forbidden) : json::json(nullptr)}};
        if (e.image_claim_unverified) {
            j["image"]["claimed"] = to_string(e.expected_image);
            j["image"]["claim_confirmed"] = kind == e.expected_image;
        } else {
            check(kind == e.expected_image, tag + ": image kind");
        }
        if (e.expected_forbidden_words) {
            std::vector<std::string> got;
            if (forbidden)
                for (const auto& w : *forbidden)
                    got.push_back(w.str());
            auto want = *e.expected_forbidden_words;
            std::sort(want.begin(), want.end());
            check(forbidden && got == want, tag + ": forbidden words");
        }

        if (e.known_inverse) {
            const LocalRule g = e.known_inverse->rule();
            const bool weak = check(verify_weak_inverse(f, g), tag + ": known inverse fails f g f = f");
            json::json inv{{"radius", e.known_inverse->radius}, {"hex", e.known_inverse->hex}, {"weak_inverse", weak}};
            if (weak) {
                const LocalRule c = make_generalized_inverse(f, g);
                const auto gi = check_generalized_inverse(f, g, c);
                check(gi.fcf_is_f && gi.cfc_is_c, tag + ": generalized inverse identities");
                inv["generalized_inverse"] = {{"radius", c.radius()}, {"fcf_is_f", gi.fcf_is_f}, {"cfc_is_c", gi.cfc_is_c}};
            }
            if (!opt.figures_dir.empty()) {
                const auto prog = dsl::load(opt.figures_dir / (e.known_inverse->figure + ".rule"));
                const LocalRule compiled = dsl::compile(prog);
                const bool same = compiled == g;
                check(same, tag + ": figure program does not compile to the stated number");
                inv["figure"] = {{"name", e.known_inverse->figure}, {"rules", prog.rules.size()}, {"matches_hex", same}};
            }
            j["known_inverse"] = inv;
        }

        const Verdict v = classify(f, opt.bounds);
        j["classify"] = json::to_json(v);
        check(replay(f, v), tag + ": verdict does not replay");
        if (e.expected_verdict == ExpectedVerdict::NonRegular) {
            check(std::holds_alternative<NonRegular>(v), tag + ": expected NonRegular");
        } else {
            // radius-4/5 inverses are verified above rather than searched for
            check(!std::holds_alternative<NonRegular>(v), tag + ": regular rule refuted");
        }
        entries.push_back(j);
    }

    json::json forcing = json::json::object();
    {
        const auto r = force_partial_rule(from_eca_number(6), 2, 5);
        const auto* c = std::get_if<ForcingContradiction>(&r);
        check(c && c->window.str() == "10001", "ECA 6: radius-2 forcing contradiction on 10001");
        forcing["eca6_r2_p5"] = detail::forcing_json(r);
    }
    if (opt.include_eca57_forcing) {
        // reported, not asserted
        forcing["eca57_r3_p" + std::to_string(opt.eca57_pmax)] =
            detail::forcing_json(force_partial_rule(from_eca_number(57), 3, opt.eca57_pmax));
    }

    rep.document = {{"catalog", entries}, {"forcing", forcing}, {"ok", rep.ok}, {"failures", rep.failures}};
    return rep;
}

} // namespace vnreg

#endif
