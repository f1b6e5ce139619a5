#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vnreg/vnreg.hpp"

namespace {

using vnreg::json::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

vnreg::LocalRule rule_arg(const std::string& spec) {
    try {
        return vnreg::parse_rule_spec(spec);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe(const vnreg::Certificate& c) {
    using namespace vnreg;
    if (auto* x = std::get_if<WeakPpcFailure>(&c))
        return "weak periodic point condition fails at ^" + x->u.str() + "^";
    if (auto* x = std::get_if<SppFailure>(&c)) {
        std::string s = "strong " + std::to_string(x->p) + "-periodic point condition fails (|w| <= " +
                        std::to_string(x->lmax) + ")";
        for (const auto& l : x->leaves) {
            s += "\n  G:";
            for (const auto& [u, pre] : l.assignment)
                s += " " + u.str() + "->" + pre.str();
            s += "  fails on ^" + l.u.str() + "." + l.w.str() + " " + l.v.str() + "^";
        }
        return s;
    }
    if (auto* x = std::get_if<SurjectiveNotInjective>(&c))
        return "surjective but not injective: " + x->x.str() + " and " + x->y.str() + " have the same image";
    if (auto* x = std::get_if<ForcingContradiction>(&c))
        return "radius-" + std::to_string(x->radius) + " window " + x->window.str() + " forced to " +
               std::to_string(int(x->first.bit)) + " by ^" + x->first.u.str() + "^ and to " +
               std::to_string(int(x->second.bit)) + " by ^" + x->second.u.str() + "^";
    return "image is not of finite type";
}

int cmd_image(const std::string& spec, bool as_json, bool dfa_text) {
    const auto f = rule_arg(spec);
    const auto img = vnreg::image(f);
    if (as_json) {
        print(vnreg::json::image_report(f, img));
        return kOk;
    }
    const auto forbidden = vnreg::minimal_forbidden_words(img);
    std::cout << "rule: " << vnreg::to_rule_spec(f) << "\n";
    std::cout << "dfa states: " << img.dfa().size() << "\n";
    std::cout << "full shift: " << (vnreg::is_full_shift(img) ? "yes" : "no") << "\n";
    std::cout << "sft: " << (forbidden ? "yes" : "no") << "\n";
    if (dfa_text)
        vnreg::write_text(std::cout, img.dfa());
    if (forbidden) {
        std::cout << "forbidden words:\n";
        for (const auto& w : *forbidden)
            std::cout << w.str() << "\n";
    } else {
        std::cout << "forbidden words: infinite\n";
    }
    return kOk;
}

int cmd_verify(const std::string& fs, const std::string& gs, bool as_json) {
    const auto f = rule_arg(fs);
    const auto g = rule_arg(gs);
    const bool ok = vnreg::verify_weak_inverse(f, g);
    if (as_json)
        print({{"f", vnreg::json::to_json(f)}, {"g", vnreg::json::to_json(g)}, {"weak_inverse", ok}});
    else
        std::cout << (ok ? "f g f = f holds\n" : "f g f = f fails\n");
    return ok ? kOk : kRefuted;
}

int cmd_search(const std::string& spec, unsigned radius, std::size_t pmax, bool as_json) {
    const auto f = rule_arg(spec);
    const auto res = vnreg::search_inverse(f, radius, pmax);
    json j{{"rule", vnreg::json::to_json(f)}, {"radius", radius}, {"pmax", pmax}};
    int code = kRefuted;
    std::string text;
    if (auto* g = std::get_if<vnreg::LocalRule>(&res)) {
        j["outcome"] = "found";
        j["inverse"] = vnreg::json::to_json(*g);
        text = "found: " + vnreg::to_rule_spec(*g);
        code = kOk;
    } else if (std::holds_alternative<vnreg::NotFound>(res)) {
        j["outcome"] = "not-found";
        text = "no radius-" + std::to_string(radius) + " weak inverse exists";
    } else {
        const vnreg::Certificate c = std::holds_alternative<vnreg::ForcingContradiction>(res)
                                         ? vnreg::Certificate{std::get<vnreg::ForcingContradiction>(res)}
                                         : vnreg::Certificate{std::get<vnreg::WeakPpcFailure>(res)};
        j["outcome"] = "refuted";
        j["certificate"] = vnreg::json::to_json(c);
        text = "refuted: " + describe(c);
    }
    if (as_json)
        print(j);
    else
        std::cout << text << "\n";
    return code;
}

int cmd_force(const std::string& spec, unsigned radius, std::size_t pmax, bool as_json) {
    const auto f = rule_arg(spec);
    const auto res = vnreg::force_partial_rule(f, radius, pmax);
    json j = vnreg::detail::forcing_json(res);
    j["rule"] = vnreg::json::to_json(f);
    j["radius"] = radius;
    j["pmax"] = pmax;
    if (auto* p = std::get_if<vnreg::PartialLocalRule>(&res)) {
        std::string table;
        for (std::uint64_t w = p->size(); w-- > 0;)
            table.push_back(p->known(w) ? char('0' + p->at(w)) : '?');
        j["table"] = table;
        if (as_json)
            print(j);
        else
            std::cout << "consistent: " << p->known_count() << " of " << p->size() << " windows forced\n"
                      << "table (MSB first): " << table << "\n";
        return kOk;
    }
    if (as_json)
        print(j);
    else
        std::cout << "refuted: "
                  << describe(std::holds_alternative<vnreg::ForcingContradiction>(res)
                                  ? vnreg::Certificate{std::get<vnreg::ForcingContradiction>(res)}
                                  : vnreg::Certificate{std::get<vnreg::WeakPpcFailure>(res)})
                  << "\n";
    return kRefuted;
}

int cmd_spp(const std::string& spec, std::size_t p, std::size_t lmax, bool as_json) {
    const auto f = rule_arg(spec);
    const auto res = vnreg::spp_check(f, p, lmax);
    json survivors = json::array();
    for (const auto& g : res.survivors)
        survivors.push_back(vnreg::json::to_json(g));
    json j{{"rule", vnreg::json::to_json(f)},
           {"period", p},
           {"lmax", lmax},
           {"points", vnreg::json::words_json(res.points)},
           {"survivors", survivors},
           {"truncated", res.truncated}};
    if (res.certificate)
        j["certificate"] = vnreg::json::to_json(*res.certificate);
    if (as_json) {
        print(j);
    } else if (res.certificate) {
        std::cout << "no survivors: " << describe(*res.certificate) << "\n";
    } else {
        std::cout << res.survivors.size() << (res.truncated ? "+" : "") << " surviving assignment(s)\n";
        for (const auto& g : res.survivors) {
            for (const auto& [u, pre] : g)
                std::cout << " " << u.str() << "->" << pre.str();
            std::cout << "\n";
        }
    }
    return res.certificate ? kRefuted : kOk;
}

int cmd_classify(const std::string& spec, const vnreg::ClassifyOptions& opt, bool as_json) {
    const auto f = rule_arg(spec);
    const auto v = vnreg::classify(f, opt);
    if (as_json) {
        auto j = vnreg::json::to_json(v);
        j["rule"] = vnreg::json::to_json(f);
        print(j);
    } else if (auto* r = std::get_if<vnreg::Regular>(&v)) {
        std::cout << "Regular, weak inverse " << vnreg::to_rule_spec(r->witness) << "\n";
    } else if (auto* n = std::get_if<vnreg::NonRegular>(&v)) {
        std::cout << "NonRegular: " << describe(n->certificate) << "\n";
    } else {
        std::cout << "Unknown: " << std::get<vnreg::Unknown>(v).reason << "\n";
    }
    return std::holds_alternative<vnreg::NonRegular>(v) ? kRefuted : kOk;
}

int cmd_reproduce(const vnreg::ReproduceOptions& opt, bool as_json) {
    const auto rep = vnreg::reproduce(opt);
    if (as_json) {
        print(rep.document);
    } else {
        for (const auto& e : rep.document["catalog"])
            std::cout << "ECA " << e["eca"] << ": expected " << e["expected"].get<std::string>() << ", got "
                      << e["classify"]["verdict"].get<std::string>() << ", image "
                      << e["image"]["kind"].get<std::string>() << "\n";
        for (const auto& [name, res] : rep.document["forcing"].items())
            std::cout << "forcing " << name << ": " << res["outcome"].get<std::string>() << "\n";
        for (const auto& f : rep.failures)
            std::cout << "FAILED: " << f << "\n";
        std::cout << (rep.ok ? "all expectations met\n" : "some expectations failed\n");
    }
    return rep.ok ? kOk : kRefuted;
}

int cmd_compile(const std::string& path, bool as_json) {
    vnreg::dsl::PatternProgram prog;
    try {
        prog = vnreg::dsl::load(path);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    const auto g = vnreg::dsl::compile(prog);
    if (as_json)
        print({{"file", path}, {"radius", prog.radius}, {"rules", prog.rules.size()}, {"rule", vnreg::json::to_json(g)}});
    else
        std::cout << vnreg::to_rule_spec(g) << "\n";
    return kOk;
}

int cmd_replay(const std::string& spec, const std::string& path, bool as_json) {
    const auto f = rule_arg(spec);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    bool ok = false;
    try {
        ok = doc.contains("verdict") ? vnreg::replay(f, vnreg::json::verdict_from(doc))
             : doc.contains("certificate") ? vnreg::replay(f, vnreg::json::certificate_from(doc["certificate"]))
                                           : vnreg::replay(f, vnreg::json::certificate_from(doc));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (as_json)
        print({{"rule", vnreg::json::to_json(f)}, {"replays", ok}});
    else
        std::cout << (ok ? "replays\n" : "does not replay\n");
    return ok ? kOk : kRefuted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Von Neumann regularity toolkit for one-dimensional binary cellular automata"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output")->configurable(false);

    std::string rule_a, rule_b, file;
    unsigned radius = 2;
    std::size_t pmax = 6, period = 1, lmax = 8;
    vnreg::ClassifyOptions copt;
    bool dfa_text = false;

    auto* image = app.add_subcommand("image", "image subshift: DFA, SFT flag, minimal forbidden words");
    image->add_option("rule", rule_a, "eca:<n> | hex:r<r>:<digits>")->required();
    image->add_flag("--dfa", dfa_text, "print the minimal DFA in text form");

    auto* verify = app.add_subcommand("verify", "check f g f = f");
    verify->add_option("f", rule_a)->required();
    verify->add_option("g", rule_b)->required();

    auto* search = app.add_subcommand("search", "search a weak inverse of the given radius");
    search->add_option("rule", rule_a)->required();
    search->add_option("--radius", radius)->capture_default_str();
    search->add_option("--pmax", pmax)->capture_default_str()->check(CLI::PositiveNumber);

    auto* force = app.add_subcommand("force", "periodic-point forcing of a radius-R inverse");
    force->add_option("rule", rule_a)->required();
    force->add_option("--radius", radius)->capture_default_str();
    force->add_option("--pmax", pmax)->capture_default_str()->check(CLI::PositiveNumber);

    auto* spp = app.add_subcommand("spp", "bounded strong periodic point condition");
    spp->add_option("rule", rule_a)->required();
    spp->add_option("--period", period)->capture_default_str()->check(CLI::PositiveNumber);
    spp->add_option("--lmax", lmax)->capture_default_str();

    auto* classify = app.add_subcommand("classify", "decide regularity within bounds");
    classify->add_option("rule", rule_a)->required();
    classify->add_option("--pmax", copt.pmax)->capture_default_str()->check(CLI::PositiveNumber);
    classify->add_option("--lmax", copt.lmax)->capture_default_str()->check(CLI::PositiveNumber);
    classify->add_option("--rmax", copt.rmax)->capture_default_str();

    vnreg::ReproduceOptions ropt;
    ropt.figures_dir = std::filesystem::path(VNREG_DATA_DIR) / "figures";
    std::string figures = ropt.figures_dir.string();
    bool skip57 = false;
    auto* reproduce = app.add_subcommand("reproduce", "recompute every catalog result");
    reproduce->add_option("--figures", figures, "directory of figure rule programs")->capture_default_str();
    reproduce->add_option("--eca57-pmax", ropt.eca57_pmax)->capture_default_str()->check(CLI::PositiveNumber);
    reproduce->add_flag("--skip-eca57", skip57, "skip the radius-3 forcing run for ECA 57");

    auto* compile = app.add_subcommand("compile", "compile a rule program to a rule spec");
    compile->add_option("file", file)->required();

    auto* replay = app.add_subcommand("replay", "re-check a certificate or verdict document");
    replay->add_option("rule", rule_a)->required();
    replay->add_option("file", file)->required();

    for (auto* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*image)
            return cmd_image(rule_a, as_json, dfa_text);
        if (*verify)
            return cmd_verify(rule_a, rule_b, as_json);
        if (*search)
            return cmd_search(rule_a, radius, pmax, as_json);
        if (*force)
            return cmd_force(rule_a, radius, pmax, as_json);
        if (*spp)
            return cmd_spp(rule_a, period, lmax, as_json);
        if (*classify)
            return cmd_classify(rule_a, copt, as_json);
        if (*reproduce) {
            ropt.figures_dir = figures;
            ropt.include_eca57_forcing = !skip57;
            return cmd_reproduce(ropt, as_json);
        }
        if (*compile)
            return cmd_compile(file, as_json);
        if (*replay)
            return cmd_replay(rule_a, file, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
