#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace vnreg;

namespace {

Word W(const char* s) { return Word::parse(s); }

EventuallyPeriodicPoint X(const char* u, const char* w, const char* v) { return {W(u), W(w), W(v)}; }

// windows of radius r occurring in the language of x
std::vector<std::uint64_t> image_windows(const SoficShift& x, unsigned r) {
    std::vector<std::uint64_t> out;
    for_each_language_word(x, 2 * r + 1, [&](std::uint64_t w) { out.push_back(w); });
    return out;
}

bool agree_on(const LocalRule& a, const LocalRule& b, const std::vector<std::uint64_t>& windows) {
    for (auto w : windows)
        if (a(w) != b(w))
            return false;
    return true;
}

} // namespace

TEST_CASE("verify_weak_inverse examples", "[regularity]") {
    CHECK(verify_weak_inverse(from_eca_number(7), from_hex(2, "23232323")));
    CHECK_FALSE(verify_weak_inverse(from_eca_number(6), from_eca_number(6)));
    CHECK(verify_weak_inverse(from_eca_number(204), from_eca_number(204)));
    CHECK(verify_weak_inverse(from_eca_number(77), from_hex(2, "107331F7")));
    CHECK(verify_weak_inverse(from_eca_number(23), from_hex(2, "23FF003B")));
    CHECK(verify_weak_inverse(from_eca_number(33), from_hex(2, "0C070F07")));
}

TEST_CASE("weak inverse routes agree", "[regularity][property]") {
    std::size_t positives = 0;
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        for (int b = 0; b < 256; ++b) {
            const auto g = from_eca_number(b);
            const bool by_table = verify_weak_inverse_by_table(f, g);
            REQUIRE(by_table == verify_weak_inverse_on_image(f, g, img));
            positives += by_table;
        }
    }
    CHECK(positives > 0);

    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i) {
        const auto f = oracle::random_rule(2, rng);
        const auto g = oracle::random_rule(2, rng);
        REQUIRE(verify_weak_inverse_by_table(f, g) == verify_weak_inverse_on_image(f, g));
    }
    // pairs found by search give positives at radius 2
    for (int a : {7, 23, 33, 77, 204, 15}) {
        const auto f = pad_radius(from_eca_number(a), 2);
        const auto found = search_inverse(from_eca_number(a), 2, 6);
        REQUIRE(std::holds_alternative<LocalRule>(found));
        const auto& g = std::get<LocalRule>(found);
        CHECK(verify_weak_inverse_by_table(f, g));
        CHECK(verify_weak_inverse_on_image(f, g));
    }
}

TEST_CASE("generalized inverses", "[regularity]") {
    const auto f7 = from_eca_number(7);
    const auto g7 = from_hex(2, "23232323");
    const auto c7 = make_generalized_inverse(f7, g7);
    CHECK(equals(compose(f7, compose(c7, f7)), f7));
    CHECK(equals(compose(c7, compose(f7, c7)), c7));
    const auto chk = check_generalized_inverse(f7, g7, c7);
    CHECK(chk.fcf_is_f);
    CHECK(chk.cfc_is_c);
    CHECK(chk.fcf_by_table);

    const auto id = from_eca_number(204);
    CHECK(equals(make_generalized_inverse(id, id), id));

    const auto f23 = from_eca_number(23);
    const auto c23 = make_generalized_inverse(f23, from_hex(2, "23FF003B"));
    CHECK(equals(compose(f23, compose(c23, f23)), f23));
    const auto chk23 = check_generalized_inverse(f23, from_hex(2, "23FF003B"), c23);
    CHECK((chk23.fcf_is_f && chk23.cfc_is_c));

    CHECK_THROWS_AS(make_generalized_inverse(from_eca_number(6), from_eca_number(6)), std::invalid_argument);

    // every radius-1 weak inverse pair yields both identities
    std::size_t pairs = 0;
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        for (int b = 0; b < 256; ++b) {
            const auto g = from_eca_number(b);
            if (!verify_weak_inverse_on_image(f, g, img))
                continue;
            ++pairs;
            const auto c = make_generalized_inverse(f, g);
            REQUIRE(equals(compose(f, compose(c, f)), f));
            REQUIRE(equals(compose(c, compose(f, c)), c));
            const auto gi = check_generalized_inverse(f, g, c);
            REQUIRE((gi.fcf_is_f && gi.cfc_is_c && gi.fcf_by_table && gi.cfc_by_table));
        }
    }
    CHECK(pairs > 0);
}

TEST_CASE("same_period_preimages", "[regularity]") {
    CHECK(same_period_preimages(from_eca_number(28), W("0")) == std::vector<Word>{W("0"), W("1")});
    CHECK(same_period_preimages(from_eca_number(102), W("1")).empty());
    for (const char* u : {"0", "01", "0110", "10111"})
        CHECK(same_period_preimages(from_eca_number(204), W(u)) == std::vector<Word>{W(u)});
    CHECK_THROWS_AS(same_period_preimages(from_eca_number(6), Word{}), std::invalid_argument);

    const auto words = oracle::all_words_up_to(7);
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        for (const auto& u : words)
            if (!u.empty())
                REQUIRE(same_period_preimages(f, u) == oracle::periodic_preimages_brute(f, u));
    }
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const auto f = oracle::random_rule(2, rng);
        for (const auto& u : oracle::all_words_up_to(6))
            if (!u.empty())
                REQUIRE(same_period_preimages(f, u) == oracle::periodic_preimages_brute(f, u));
    }
}

TEST_CASE("weak periodic point condition", "[regularity]") {
    CHECK(weak_ppc_failure(from_eca_number(102), 1) == W("1"));
    CHECK_FALSE(weak_ppc_failure(from_eca_number(9), 5).has_value());
    CHECK_FALSE(weak_ppc_failure(from_eca_number(204), 6).has_value());
    CHECK_THROWS_AS(weak_ppc_failure(from_eca_number(9), 0), std::invalid_argument);

    // brute force over image periodic points
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        std::optional<Word> expect;
        for (const auto& u : lyndon_words(5)) {
            if (!img.contains(PeriodicPoint(u)))
                continue;
            if (oracle::periodic_preimages_brute(f, u).empty()) {
                expect = u;
                break;
            }
        }
        REQUIRE(weak_ppc_failure(f, img, 5) == expect);
    }
}

TEST_CASE("asymptotic preimages: examples", "[regularity]") {
    const auto f9 = from_eca_number(9);
    CHECK_FALSE(asymptotic_preimage_exists(f9, X("0", "11", "0"), W("1"), W("1")));
    const auto f28 = from_eca_number(28);
    CHECK_FALSE(asymptotic_preimage_exists(f28, X("0", "1", "0"), W("0"), W("0")));
    const auto id = from_eca_number(204);
    for (const auto& x : {X("0", "11", "0"), X("01", "", "1"), X("011", "0101", "01")})
        CHECK(asymptotic_preimage_exists(id, x, x.left, x.right));

    // ECA 58: both choices of G(0) fail
    const auto f58 = from_eca_number(58);
    CHECK_FALSE(asymptotic_preimage_exists(f58, X("0", "1", "0"), W("1"), W("1")));
    CHECK_FALSE(asymptotic_preimage_exists(f58, X("0", "11", "0"), W("0"), W("0")));

    // preconditions
    CHECK_THROWS_AS(asymptotic_preimage_exists(f9, X("0", "11", "0"), W("0"), W("1")), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_preimage_exists(f9, X("0", "11", "0"), W("11"), W("1")), std::invalid_argument);
}

TEST_CASE("asymptotic preimages agree with bounded brute force", "[regularity][property]") {
    constexpr std::size_t kmax = 6;
    std::size_t instances = 0, positives = 0;
    for (int a : {6, 7, 9, 23, 27, 28, 33, 41, 57, 58, 77, 102, 204}) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        const auto pts = periodic_points(img, 2);
        for (const auto& pu : pts)
            for (const auto& pv : pts) {
                const Word& u = pu.canonical_form();
                const Word& v = pv.canonical_form();
                const auto us = same_period_preimages(f, u);
                const auto vs = same_period_preimages(f, v);
                for (const auto& w : oracle::all_words_up_to(3)) {
                    const EventuallyPeriodicPoint x(u, w, v);
                    if (!img.contains(x))
                        continue;
                    for (const auto& U : us)
                        for (const auto& V : vs) {
                            const bool got = asymptotic_preimage_exists(f, x, U, V);
                            const bool brute = oracle::asymptotic_preimage_brute_upto(f, x, U, V, kmax);
                            INFO("ECA " << a << " x=" << x.str() << " U=" << U.str() << " V=" << V.str());
                            REQUIRE(got == brute);
                            ++instances;
                            positives += got;
                        }
                }
            }
    }
    CHECK(instances > 100);
    CHECK(positives > 0);
    CHECK(positives < instances);
}

TEST_CASE("spp_check examples", "[regularity]") {
    const auto f9 = from_eca_number(9);
    const auto r9 = spp_check(f9, 1, 4);
    CHECK(r9.points == std::vector<Word>{W("0"), W("1")});
    CHECK(r9.domains == std::vector<std::vector<Word>>{{W("1")}, {W("0")}});
    CHECK(r9.survivors.empty());
    REQUIRE(r9.certificate.has_value());
    REQUIRE(std::holds_alternative<SppFailure>(*r9.certificate));
    CHECK(replay(f9, *r9.certificate));
    // the unique G fails at ^0.11 0^
    CHECK_FALSE(asymptotic_preimage_exists(f9, X("0", "11", "0"), W("1"), W("1")));

    const auto f58 = from_eca_number(58);
    const auto r58 = spp_check(f58, 1, 4);
    CHECK(r58.survivors.empty());
    REQUIRE(r58.certificate.has_value());
    const auto& cert58 = std::get<SppFailure>(*r58.certificate);
    CHECK(cert58.leaves.size() == 2);
    CHECK(replay(f58, *r58.certificate));
    for (const auto& leaf : cert58.leaves) {
        REQUIRE(leaf.assignment.size() == 1);
        // G(0)=1 fails already at w = 1
        if (leaf.assignment[0].second == W("1"))
            CHECK(leaf.w == W("1"));
    }

    const auto id = from_eca_number(204);
    const auto rid = spp_check(id, 1, 4);
    REQUIRE(rid.survivors.size() == 1);
    CHECK(rid.survivors[0] == GAssignment{{W("0"), W("0")}, {W("1"), W("1")}});
    CHECK_FALSE(rid.certificate.has_value());

    CHECK_THROWS_AS(spp_check(id, 0, 4), std::invalid_argument);
}

TEST_CASE("spp survivors shrink with lmax and p", "[regularity][property]") {
    for (int a : {7, 23, 33, 77, 204, 6, 57, 28, 12, 44}) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        for (std::size_t p = 1; p <= 3; ++p) {
            std::optional<SppResult> prev;
            for (std::size_t l = 0; l <= 4; ++l) {
                auto cur = spp_check(f, img, p, l);
                if (cur.truncated)
                    break;
                if (prev && !prev->truncated)
                    for (const auto& g : cur.survivors)
                        REQUIRE(std::find(prev->survivors.begin(), prev->survivors.end(), g) !=
                                prev->survivors.end());
                prev = std::move(cur);
            }
            // restricting a p+1 survivor to |u| <= p gives a p survivor
            const auto small = spp_check(f, img, p, 3);
            const auto big = spp_check(f, img, p + 1, 3);
            if (small.truncated || big.truncated)
                continue;
            for (const auto& g : big.survivors) {
                GAssignment restricted;
                for (const auto& kv : g)
                    if (kv.first.size() <= p)
                        restricted.push_back(kv);
                REQUIRE(std::find(small.survivors.begin(), small.survivors.end(), restricted) !=
                        small.survivors.end());
            }
        }
    }
}

TEST_CASE("forcing examples", "[regularity]") {
    const auto f6 = from_eca_number(6);
    const auto r6 = force_partial_rule(f6, 2, 5);
    REQUIRE(std::holds_alternative<ForcingContradiction>(r6));
    const auto& c6 = std::get<ForcingContradiction>(r6);
    CHECK(c6.window == W("10001"));
    CHECK(c6.first.bit != c6.second.bit);
    CHECK(replay(f6, Certificate{c6}));

    const auto f7 = from_eca_number(7);
    const auto g7 = from_hex(2, "23232323");
    const auto r7 = force_partial_rule(f7, 2, 6);
    REQUIRE(std::holds_alternative<PartialLocalRule>(r7));
    const auto& p7 = std::get<PartialLocalRule>(r7);
    CHECK(p7.known_count() > 0);
    for (std::uint64_t w = 0; w < p7.size(); ++w)
        if (p7.known(w))
            CHECK(p7.at(w) == g7.at(w));

    const auto id = from_eca_number(204);
    const auto rid = force_partial_rule(id, 1, 3);
    REQUIRE(std::holds_alternative<PartialLocalRule>(rid));
    const auto& pid = std::get<PartialLocalRule>(rid);
    // every window of a period-<=3 point is forced to its center
    for (const auto& u : lyndon_words(3))
        for (std::size_t i = 0; i < u.size(); ++i) {
            const auto w = periodic_window(u, i, 1);
            REQUIRE(pid.known(w));
            CHECK(pid.at(w) == u[i]);
        }
    CHECK(pid.known_count() == 8);

    const auto r102 = force_partial_rule(from_eca_number(102), 1, 3);
    CHECK(std::holds_alternative<WeakPpcFailure>(r102));
    CHECK_THROWS_AS(force_partial_rule(id, 1, 0), std::invalid_argument);
}

TEST_CASE("forcing never contradicts a known inverse", "[regularity][property]") {
    for (const auto& e : catalog()) {
        if (!e.known_inverse)
            continue;
        const auto f = e.rule();
        const auto g = e.known_inverse->rule();
        const auto img = image(f);
        for (std::size_t pmax : {1, 3, 6, 10}) {
            const auto r = force_partial_rule(f, img, g.radius(), pmax);
            INFO("ECA " << e.eca_number << " pmax " << pmax);
            REQUIRE(std::holds_alternative<PartialLocalRule>(r));
            const auto& p = std::get<PartialLocalRule>(r);
            for (std::uint64_t w = 0; w < p.size(); ++w)
                if (p.known(w))
                    REQUIRE(p.at(w) == g.at(w));
        }
    }
}

TEST_CASE("ECA 57 has no radius-3 weak inverse", "[regularity]") {
    const auto f = from_eca_number(57);
    const auto img = image(f);
    const auto r = force_partial_rule(f, img, 3, 20);
    REQUIRE(std::holds_alternative<ForcingContradiction>(r));
    CHECK(replay(f, Certificate{std::get<ForcingContradiction>(r)}));
    // independent of forcing: exhaustive completion from an empty table
    bool any = false;
    detail::complete_inverse(f, img, PartialLocalRule(3), [&](LocalRule) {
        any = true;
        return false;
    });
    CHECK_FALSE(any);
    // radius 4 does exist
    CHECK(verify_weak_inverse(f, catalog_entry(57).known_inverse->rule()));
}

TEST_CASE("search examples", "[regularity]") {
    const auto f7 = from_eca_number(7);
    const auto img7 = image(f7);
    const auto s7 = search_inverse(f7, img7, 2, 8);
    REQUIRE(std::holds_alternative<LocalRule>(s7));
    CHECK(verify_weak_inverse(f7, std::get<LocalRule>(s7)));
    CHECK(agree_on(std::get<LocalRule>(s7), from_hex(2, "23232323"), image_windows(img7, 2)));

    const auto all7 = search_all_inverses(f7, img7, 2, 8);
    CHECK_FALSE(all7.truncated);
    CHECK(all7.inverses.size() == 1);

    CHECK(std::holds_alternative<ForcingContradiction>(search_inverse(from_eca_number(6), 2, 8)));

    const auto sid = search_inverse(from_eca_number(204), 0, 2);
    REQUIRE(std::holds_alternative<LocalRule>(sid));
    CHECK(std::get<LocalRule>(sid) == identity_rule(0));
}

TEST_CASE("search agrees with exhaustive enumeration", "[regularity][property]") {
    // radius-0 and radius-1 weak inverses of every ECA
    std::vector<LocalRule> r0;
    for (int n = 0; n < 4; ++n) {
        LocalRule g(0);
        g.set(0, n & 1);
        g.set(1, (n >> 1) & 1);
        r0.push_back(g);
    }
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto img = image(f);
        for (unsigned r = 0; r <= 1; ++r) {
            bool exists = false;
            if (r == 0) {
                for (const auto& g : r0)
                    exists = exists || verify_weak_inverse_on_image(f, g, img);
            } else {
                for (int b = 0; b < 256 && !exists; ++b)
                    exists = verify_weak_inverse_on_image(f, from_eca_number(b), img);
            }
            const auto s = search_inverse(f, img, r, 4);
            INFO("ECA " << a << " radius " << r);
            REQUIRE(std::holds_alternative<LocalRule>(s) == exists);
            if (exists)
                REQUIRE(verify_weak_inverse(f, std::get<LocalRule>(s)));
        }
    }
}

TEST_CASE("injectivity and surjectivity", "[regularity]") {
    const auto f102 = from_eca_number(102);
    const auto inj102 = check_injectivity(f102);
    CHECK_FALSE(inj102.injective);
    REQUIRE(inj102.witness.has_value());
    CHECK(same_image(f102, inj102.witness->first, inj102.witness->second));
    CHECK_FALSE(same_configuration(inj102.witness->first, inj102.witness->second));
    CHECK(is_injective(from_eca_number(170)));
    CHECK_FALSE(is_surjective(from_eca_number(6)));
    CHECK(is_surjective(f102));

    // the six reversible ECA: identity, shifts, complements
    const std::vector<int> reversible{15, 51, 85, 170, 204, 240};
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto res = check_injectivity(f);
        const bool expect = std::find(reversible.begin(), reversible.end(), a) != reversible.end();
        REQUIRE(res.injective == expect);
        if (!res.injective) {
            REQUIRE(res.witness.has_value());
            REQUIRE(same_image(f, res.witness->first, res.witness->second));
            REQUIRE_FALSE(same_configuration(res.witness->first, res.witness->second));
        }
        // surjectivity against brute force on words up to length 10
        bool all_words = true;
        for (std::size_t n = 1; n <= 10 && all_words; ++n)
            all_words = oracle::image_words(f, n).size() == (std::size_t{1} << n);
        REQUIRE(is_surjective(f) == all_words);
        if (res.injective)
            REQUIRE(is_surjective(f));
    }
    // radius 0 rules are handled too
    CHECK(is_injective(identity_rule(0)));
    LocalRule flip(0);
    flip.set(0, true);
    CHECK(is_injective(flip));
    CHECK_FALSE(is_injective(LocalRule(0)));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto f = oracle::random_rule(2, rng);
        const auto res = check_injectivity(f);
        if (!res.injective) {
            REQUIRE(same_image(f, res.witness->first, res.witness->second));
            REQUIRE_FALSE(same_configuration(res.witness->first, res.witness->second));
        }
    }
}

TEST_CASE("classify examples", "[regularity]") {
    const auto v9 = classify(from_eca_number(9));
    REQUIRE(std::holds_alternative<NonRegular>(v9));
    const auto& c9 = std::get<NonRegular>(v9).certificate;
    REQUIRE(std::holds_alternative<SppFailure>(c9));
    CHECK(std::get<SppFailure>(c9).p == 1);
    CHECK(replay(from_eca_number(9), v9));

    const auto v27 = classify(from_eca_number(27));
    REQUIRE(std::holds_alternative<NonRegular>(v27));
    CHECK(std::holds_alternative<ImageNotSft>(std::get<NonRegular>(v27).certificate));
    CHECK(replay(from_eca_number(27), v27));

    const auto v7 = classify(from_eca_number(7));
    REQUIRE(std::holds_alternative<Regular>(v7));
    CHECK(verify_weak_inverse(from_eca_number(7), std::get<Regular>(v7).witness));

    const auto v102 = classify(from_eca_number(102));
    REQUIRE(std::holds_alternative<NonRegular>(v102));
    CHECK(std::holds_alternative<SurjectiveNotInjective>(std::get<NonRegular>(v102).certificate));
    CHECK(replay(from_eca_number(102), v102));

    for (int a : {15, 51, 170, 204}) {
        const auto v = classify(from_eca_number(a));
        REQUIRE(std::holds_alternative<Regular>(v));
        CHECK(replay(from_eca_number(a), v));
    }

    // the weak-inverse radius bound matters: ECA 6 needs more than radius 2
    CHECK(std::holds_alternative<Unknown>(classify(from_eca_number(6))));
}

TEST_CASE("all ECA verdicts replay", "[regularity][property]") {
    std::size_t regular = 0, nonregular = 0;
    for (int a = 0; a < 256; ++a) {
        const auto f = from_eca_number(a);
        const auto v = classify(f, ClassifyOptions{4, 6, 1});
        INFO("ECA " << a << " " << verdict_name(v));
        REQUIRE(replay(f, v));
        regular += std::holds_alternative<Regular>(v);
        nonregular += std::holds_alternative<NonRegular>(v);
        // the verdict survives serialization
        const auto back = json::verdict_from(json::to_json(v));
        REQUIRE(json::to_json(back) == json::to_json(v));
    }
    CHECK(regular > 0);
    CHECK(nonregular > 0);
}

TEST_CASE("tampered certificates do not replay", "[regularity]") {
    const auto f9 = from_eca_number(9);
    auto spp = std::get<SppFailure>(*spp_check(f9, 1, 4).certificate);
    REQUIRE(replay(f9, Certificate{spp}));
    auto shorter = spp;
    shorter.lmax = 1;  // w = 11 is longer than the claimed bound
    CHECK_FALSE(replay(f9, Certificate{shorter}));
    auto no_leaves = spp;
    no_leaves.leaves.clear();
    CHECK_FALSE(replay(f9, Certificate{no_leaves}));

    CHECK_FALSE(replay(f9, Certificate{WeakPpcFailure{W("0")}}));
    CHECK(replay(from_eca_number(102), Certificate{WeakPpcFailure{W("1")}}));
    CHECK_FALSE(replay(from_eca_number(7), Certificate{ImageNotSft{}}));
    CHECK(replay(from_eca_number(27), Certificate{ImageNotSft{}}));

    auto c6 = std::get<ForcingContradiction>(force_partial_rule(from_eca_number(6), 2, 5));
    auto flipped = c6;
    flipped.second.bit = flipped.first.bit;
    CHECK_FALSE(replay(from_eca_number(6), Certificate{flipped}));
    auto moved = c6;
    moved.window = W("10000");
    CHECK_FALSE(replay(from_eca_number(6), Certificate{moved}));

    const SurjectiveNotInjective bogus{X("0", "", "0"), X("0", "", "0")};
    CHECK_FALSE(replay(from_eca_number(102), Certificate{bogus}));
    CHECK_FALSE(replay(from_eca_number(6), Certificate{SurjectiveNotInjective{X("0", "", "0"), X("1", "", "1")}}));

    // Regular verdicts replay by verification
    CHECK_FALSE(replay(from_eca_number(7), Verdict{Regular{from_eca_number(7)}}));
}
