// strat-kit: command line front end over the stratkit library.
//
// Exit status: 0 success, 1 refutation or failed check, 2 enumeration budget
// exceeded, 3 malformed input.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stratkit/audit.hpp"
#include "stratkit/corpus.hpp"
#include "stratkit/ex.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/identities.hpp"
#include "stratkit/json_io.hpp"
#include "stratkit/links.hpp"
#include "stratkit/pairing.hpp"
#include "stratkit/subdivision.hpp"
#include "stratkit/vertical.hpp"
#include "stratkit/weq.hpp"

namespace {

using namespace stratkit;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailure = 1, kBudget = 2, kMalformed = 3 };

struct Common {
    std::string in, poset_file, out;
    std::uint64_t budget = kDefaultBudget;
};

PosetPtr optional_poset(const Common& c) {
    return c.poset_file.empty() ? nullptr : poset_from_json(read_text_file(c.poset_file));
}

// The poset from --poset, else the one embedded in the input document.
StratifiedSet load_stratified(const Common& c) { return stratified_from_json(read_text_file(c.in), optional_poset(c)); }

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    require(static_cast<bool>(f), ErrorKind::Malformed, "cannot write " + c.out);
    f << text;
}

std::string with_truncation(const std::string& sset_json, int truncation) {
    Json doc = Json::parse(sset_json);
    doc["truncation"] = truncation;
    return doc.dump(2) + "\n";
}

Json flag_json(const Poset& p, const Flag& f) { return p.format_flag(f); }

Json homology_json(const HomologyReport& h) {
    Json out = Json::array();
    for (int d = 0; d <= h.valid_up_to; ++d) out.push_back(Json{{"degree", d}, {"rank", h.betti[d]}, {"torsion", h.torsion[d]}});
    return out;
}

void add_common(CLI::App* app, Common& c, bool needs_input = true) {
    if (needs_input) app->add_option("--in", c.in, "input JSON document")->required()->check(CLI::ExistingFile);
    app->add_option("--poset", c.poset_file, "poset JSON (defaults to the one embedded in the input)")
        ->check(CLI::ExistingFile);
    app->add_option("--out", c.out, "write to this file instead of stdout");
    app->add_option("--budget", c.budget, "node-expansion ceiling for enumerations");
}

int run(int argc, char** argv) {
    CLI::App app{"Finite stratified simplicial sets: links, subdivisions, Ex, diagrams and probes"};
    app.require_subcommand(1);
    Common c;
    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("link", "simplicial link Link_I(K)");
        add_common(cmd, c);
        auto flag = std::make_shared<std::string>();
        cmd->add_option("--flag", *flag, "regular flag, comma separated")->required();
        cmd->callback([&, flag] {
            action = [&, flag] {
                StratifiedSet k = load_stratified(c);
                emit(c, sset_to_json(link(k, k.poset->parse_flag(*flag)).set()));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("holink", "homotopy link HoLink_I(K), truncated");
        add_common(cmd, c);
        auto flag = std::make_shared<std::string>();
        auto trunc = std::make_shared<int>(2);
        cmd->add_option("--flag", *flag, "regular flag, comma separated")->required();
        cmd->add_option("--truncation,--dim-bound", *trunc, "top dimension computed")->check(CLI::NonNegativeNumber);
        cmd->callback([&, flag, trunc] {
            action = [&, flag, trunc] {
                StratifiedSet k = load_stratified(c);
                Holink h = holink(k, k.poset->parse_flag(*flag), *trunc, c.budget);
                emit(c, with_truncation(sset_to_json(h.set()), *trunc));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("subdivide", "sd, sd_P or sd_P_naiv of a stratified set");
        add_common(cmd, c);
        auto kind = std::make_shared<std::string>("sd_P");
        cmd->add_option("--kind", *kind, "sd | sd_P | sd_P_naiv")->check(CLI::IsMember({"sd", "sd_P", "sd_P_naiv"}));
        cmd->callback([&, kind] {
            action = [&, kind] {
                StratifiedSet k = load_stratified(c);
                if (*kind == "sd") emit(c, sset_to_json(sd(k.carrier).set));
                else if (*kind == "sd_P") emit(c, stratified_to_json(sd_p(k).set));
                else emit(c, stratified_to_json(sd_p_naiv(k).set));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("ex", "Ex_P (iterated) or Ex_P^naiv, truncated");
        add_common(cmd, c);
        auto depth = std::make_shared<int>(1);
        auto bound = std::make_shared<int>(2);
        auto naive = std::make_shared<bool>(false);
        cmd->add_option("--depth", *depth, "number of iterations")->check(CLI::PositiveNumber);
        cmd->add_option("--dim-bound", *bound, "truncation dimension")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--naive", *naive, "use the naive subdivision (depth 1 only)");
        cmd->callback([&, depth, bound, naive] {
            action = [&, depth, bound, naive] {
                StratifiedSet k = load_stratified(c);
                StratifiedSet out;
                if (*naive) {
                    require(*depth == 1, ErrorKind::Malformed, "--naive supports depth 1 only");
                    out = ex_p_naiv(k, *bound, c.budget).set;
                } else {
                    out = ex_p_iterated(k, *depth, *bound, c.budget);
                }
                emit(c, stratified_to_json(out, *bound));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("verticalize", "V(S) of a labelled simplicial set");
        add_common(cmd, c);
        cmd->callback([&] {
            action = [&] {
                LabelledSet s = labelled_from_json(read_text_file(c.in), optional_poset(c));
                emit(c, stratified_to_json(verticalize(s).set));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("label-sd", "sd(K) as a labelled simplicial set");
        add_common(cmd, c);
        cmd->callback([&] {
            action = [&] {
                emit(c, labelled_to_json(label_subdivision(load_stratified(c)).labelled));
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("diagram", "D_P of a stratified set, U of a labelled set, C_P of a diagram");
        add_common(cmd, c);
        auto kind = std::make_shared<std::string>();
        auto trunc = std::make_shared<int>(2);
        cmd->add_option("--kind", *kind, "D_P | U | C_P")->required()->check(CLI::IsMember({"D_P", "U", "C_P"}));
        cmd->add_option("--truncation,--dim-bound", *trunc, "holink truncation for D_P")
            ->check(CLI::NonNegativeNumber);
        cmd->callback([&, kind, trunc] {
            action = [&, kind, trunc] {
                const std::string text = read_text_file(c.in);
                if (*kind == "D_P") {
                    emit(c, diagram_to_json(diagram_d(stratified_from_json(text, optional_poset(c)), *trunc, c.budget).diagram));
                } else if (*kind == "U") {
                    emit(c, diagram_to_json(u_functor(labelled_from_json(text, optional_poset(c)))));
                } else {
                    emit(c, stratified_to_json(c_p(diagram_from_json(text, optional_poset(c))).set));
                }
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("homology", "integral homology of a (stratified) simplicial set");
        add_common(cmd, c);
        auto deg = std::make_shared<int>(2);
        cmd->add_option("--max-deg", *deg, "top degree")->check(CLI::NonNegativeNumber);
        cmd->callback([&, deg] {
            action = [&, deg] {
                SimplicialSet x = sset_from_json(read_text_file(c.in));
                Json doc{{"homology", homology_json(homology(x, *deg))}};
                emit(c, doc.dump(2) + "\n");
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("homotopy-classes", "stratified homotopy classes [K, L]_P");
        add_common(cmd, c, false);
        auto src = std::make_shared<std::string>(), tgt = std::make_shared<std::string>();
        cmd->add_option("--source", *src, "stratified K")->required()->check(CLI::ExistingFile);
        cmd->add_option("--target", *tgt, "stratified L")->required()->check(CLI::ExistingFile);
        cmd->callback([&, src, tgt] {
            action = [&, src, tgt] {
                PosetPtr p = optional_poset(c);
                StratifiedSet k = stratified_from_json(read_text_file(*src), p);
                StratifiedSet l = stratified_from_json(read_text_file(*tgt), p ? p : k.poset);
                require(*k.poset == *l.poset, ErrorKind::Malformed, "source and target use different posets");
                HomotopyClasses hc = homotopy_classes(k, l, c.budget);
                Json maps = Json::array();
                for (size_t i = 0; i < hc.maps.size(); ++i)
                    maps.push_back(Json{{"class", hc.class_of[i]},
                                        {"map", Json::parse(map_to_json(k.carrier, l.carrier, hc.maps[i]))["images"]}});
                Json doc{{"maps", hc.maps.size()}, {"classes", hc.num_classes}, {"members", maps}};
                emit(c, doc.dump(2) + "\n");
                return kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("check-weq", "probe a stratified map flag by flag");
        add_common(cmd, c, false);
        auto map_file = std::make_shared<std::string>();
        auto deg = std::make_shared<int>(1);
        auto mode = std::make_shared<std::string>("link");
        auto trunc = std::make_shared<int>(2);
        cmd->add_option("--map", *map_file, "map document with source, target and images")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--max-deg", *deg, "homology degrees compared")->check(CLI::NonNegativeNumber);
        cmd->add_option("--mode", *mode, "link | holink")->check(CLI::IsMember({"link", "holink"}));
        cmd->add_option("--truncation", *trunc, "holink truncation in holink mode")->check(CLI::PositiveNumber);
        cmd->callback([&, map_file, deg, mode, trunc] {
            action = [&, map_file, deg, mode, trunc] {
                MapDocument m = map_document_from_json(read_text_file(*map_file), optional_poset(c));
                const ProbeMode pm = *mode == "link" ? ProbeMode::Link : ProbeMode::Holink;
                ProbeReport r = probe(m.source, m.target, m.map, *deg, pm, *trunc, c.budget);
                const Poset& p = *m.source.poset;
                Json levels = Json::array();
                for (const auto& l : r.levels)
                    levels.push_back(Json{{"flag", flag_json(p, l.flag)},
                                          {"pi0_bijective", l.pi0_bijective},
                                          {"homology_iso", l.homology_iso},
                                          {"source", homology_json(l.source)},
                                          {"target", homology_json(l.target)}});
                Json doc{{"mode", *mode}, {"max_deg", *deg}, {"verdict", r.verdict()}};
                doc["certificate"] = r.certificate() ? Json(p.format_flag(*r.certificate())) : Json(nullptr);
                doc["levels"] = levels;
                emit(c, doc.dump(2) + "\n");
                return r.refuted() ? kFailure : kOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("verify-identities", "relations between j^k, r^k and sd_P of operators");
        add_common(cmd, c, false);
        auto len = std::make_shared<int>(4);
        auto all = std::make_shared<bool>(false);
        cmd->add_option("--max-len", *len, "longest flag checked")->check(CLI::PositiveNumber);
        cmd->add_flag("--with-factorizations", *all, "also check the factorisation squares and t surjectivity");
        cmd->callback([&, len, all] {
            action = [&, len, all] {
                PosetPtr p = c.poset_file.empty() ? chain3() : optional_poset(c);
                SdPCache cache(p);
                IdentityReport rep = verify_identities(p, *len, cache);
                if (*all) {
                    for (auto& i : verify_factorizations(p, *len, cache).instances) rep.instances.push_back(i);
                    for (auto& i : verify_t_surjective(p, *len, *len - 1, cache).instances) rep.instances.push_back(i);
                }
                emit(c, rep.to_tsv(*p));
                return rep.failures() == 0 ? kOk : kFailure;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("check-pairing", "pairing on K -> Ex_P^naiv(K) or J-hat -> Ex_P(K)");
        add_common(cmd, c);
        auto bound = std::make_shared<int>(2);
        auto variant = std::make_shared<std::string>("both");
        cmd->add_option("--dim-bound", *bound, "truncation dimension")->check(CLI::NonNegativeNumber);
        cmd->add_option("--variant", *variant, "naive | conjugated | both")
            ->check(CLI::IsMember({"naive", "conjugated", "both"}));
        cmd->callback([&, bound, variant] {
            action = [&, bound, variant] {
                StratifiedSet k = load_stratified(c);
                SdPCache cache(k.poset);
                Json doc = Json::object();
                bool ok = true;
                auto report = [&](const char* name, const ExPairing& ep) {
                    Json t = Json::array();
                    for (auto [a, b] : ep.pairing.t) t.push_back(Json::array({a, b}));
                    doc[name] = Json{{"simplices", ep.ex.set.size()},
                                     {"pairs", t},
                                     {"deferred", ep.pairing.deferred},
                                     {"unpaired", ep.pairing.unpaired},
                                     {"well_formed", ep.check.well_formed},
                                     {"proper", ep.check.proper},
                                     {"admissible", ep.check.admissible},
                                     {"regular", ep.check.regular},
                                     {"detail", ep.check.detail}};
                    ok = ok && ep.check.all() && ep.pairing.unpaired.empty();
                };
                if (*variant != "conjugated") report("naive", build_pairing_ex_naiv(k, *bound, c.budget));
                if (*variant != "naive") report("conjugated", build_pairing_ex(k, *bound, cache, c.budget));
                emit(c, doc.dump(2) + "\n");
                return ok ? kOk : kFailure;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("corpus", "run the acceptance suite, or write the corpus as JSON");
        add_common(cmd, c, false);
        auto ids = std::make_shared<std::vector<int>>();
        auto dir = std::make_shared<std::string>();
        cmd->add_option("--criteria", *ids, "criterion numbers (default all)")->delimiter(',');
        cmd->add_option("--emit-dir", *dir, "write corpus objects into this directory and stop");
        cmd->callback([&, ids, dir] {
            action = [&, ids, dir] {
                PosetPtr p = chain3();
                if (!dir->empty()) {
                    std::filesystem::create_directories(*dir);
                    auto write = [&](const std::string& name, const std::string& text) {
                        std::string file = name;
                        for (char& ch : file)
                            if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                        std::ofstream(std::filesystem::path(*dir) / (file + ".json")) << text;
                        std::cout << file << ".json\n";
                    };
                    write("poset_chain3", poset_to_json(*p));
                    for (const auto& e : standard_corpus(p)) write(e.name, stratified_to_json(e.set));
                    for (const auto& e : labelled_corpus(p))
                        if (e.name.rfind("sd ", 0) != 0) write("labelled " + e.name, labelled_to_json(e.set));
                    const Flag top{0, 1, 2};
                    StratifiedInclusion bd = boundary(p, top);
                    write("boundary_inclusion", map_document_to_json(bd.sub, standard_simplex(p, top), bd.inclusion));
                    return kOk;
                }
                std::vector<int> which = *ids;
                if (which.empty())
                    for (int i = 1; i <= kNumCriteria; ++i) which.push_back(i);
                bool ok = true;
                for (int id : which) {
                    CriterionResult r = run_criterion(id, c.budget);
                    std::cout << r.line() << std::endl;
                    ok = ok && r.pass;
                }
                return ok ? kOk : kFailure;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "strat-kit: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::BudgetExceeded: return kBudget;
            case ErrorKind::Malformed:
            case ErrorKind::OutOfRange:
            case ErrorKind::NotCofibrant: return kMalformed;
            default: return kFailure;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "strat-kit: " << e.what() << '\n';
        return kMalformed;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
