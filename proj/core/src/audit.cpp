#include "stratkit/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "stratkit/corpus.hpp"
#include "stratkit/diagrams.hpp"
#include "stratkit/homology.hpp"
#include "stratkit/identities.hpp"
#include "stratkit/links.hpp"
#include "stratkit/ordered_complex.hpp"
#include "stratkit/pairing.hpp"
#include "stratkit/subdivision.hpp"
#include "stratkit/vertical.hpp"
#include "stratkit/weq.hpp"

namespace stratkit {

std::string CriterionResult::line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", seconds);
    return "criterion " + std::to_string(id) + ": " + (pass ? "PASS" : "FAIL") + " " + title + " (" + buf +
           " s, limit " + std::to_string(static_cast<int>(limit_seconds)) + " s) " + detail;
}

namespace {

// Collects the first failure; later ones only bump the count.
struct Outcome {
    int checked = 0, failed = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first = what;
    }
    std::string summary() const {
        return failed == 0 ? std::to_string(checked) + " checks"
                           : std::to_string(failed) + "/" + std::to_string(checked) + " failed, first: " + first;
    }
};

std::string fmt(const Poset& p, const Flag& f) { return p.format_flag(f); }

Outcome identities_criterion() {
    PosetPtr p = chain3();
    SdPCache cache(p);
    IdentityReport rep = verify_identities(p, 4, cache);
    Outcome o;
    for (const auto& i : rep.instances) o.check(i.pass, i.equation + " at " + fmt(*p, i.flag) + " " + i.detail);
    return o;
}

Outcome surjectivity_criterion() {
    PosetPtr p = chain3();
    SdPCache cache(p);
    Outcome o;
    for (const auto& i : verify_t_surjective(p, 4, 3, cache).instances)
        o.check(i.pass, "t at " + fmt(*p, i.flag) + " " + i.detail);
    return o;
}

Outcome boundary_holink_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    const Flag j{0, 1, 2};
    StratifiedSet full = standard_simplex(p, j);
    StratifiedSet bd = boundary(p, j).sub;
    Outcome o;
    o.check(holink(bd, j, 0, budget).set().empty(), "holink of the boundary at the full flag is nonempty");
    o.check(!holink(full, j, 0, budget).set().empty(), "holink of the simplex at the full flag is empty");
    for (const Flag& i : regular_flags(*p)) {
        if (i == j || !flag_subflag(i, j)) continue;
        Link a = link(bd, i), b = link(full, i);
        o.check(pi0_count(a.set()) == pi0_count(b.set()), "pi0 of links differs at " + fmt(*p, i));
        o.check(homology(a.set(), 1) == homology(b.set(), 1), "H0/H1 of links differ at " + fmt(*p, i));
    }
    return o;
}

Outcome link_holink_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    auto corpus = standard_corpus(p);
    Outcome o;
    o.check(corpus.size() >= 8, "corpus too small");
    for (const auto& e : corpus)
        for (const Flag& i : regular_flags(*p)) {
            Link l = link(e.set, i);
            Holink h = holink(e.set, i, 2, budget);
            const std::string where = e.name + " at " + fmt(*p, i);
            o.check(pi0_count(l.set()) == pi0_count(h.set()), "pi0 differs for " + where);
            HomologyReport hl = homology(l.set(), 1), hh = homology(h.set(), 1);
            o.check(hl == hh, "H0/H1 differ for " + where + ": " + hl.to_string() + " vs " + hh.to_string());
        }
    return o;
}

Outcome vertical_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    SdPCache cache(p);
    Outcome o;
    for (const auto& e : standard_corpus(p)) {
        Verticalization v = verticalize(label_subdivision(e.set).labelled);
        StratifiedSubdivision s = sd_p(e.set, cache);
        o.check(find_stratified_isomorphism(v.set, s.set, budget).has_value(),
                "verticalized labelled subdivision is not sd_P for " + e.name);
    }
    return o;
}

Outcome cofibrancy_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    Outcome o;
    for (const auto& e : labelled_corpus(p)) {
        Diagram u = u_functor(e.set);
        CofibrancyReport c = is_cofibrant(u);
        o.check(c.cofibrant, "U(" + e.name + ") not cofibrant: " + c.certificate);
        if (!c.cofibrant) continue;
        o.check(find_stratified_isomorphism(c_p(u).set, verticalize(e.set).set, budget).has_value(),
                "C_P U differs from V for " + e.name);
        o.check(find_labelled_isomorphism(diagram_to_labelled(u), e.set, budget).has_value(),
                "round trip through U fails for " + e.name);
    }
    return o;
}

Outcome pairing_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    SdPCache cache(p);
    Outcome o;
    for (const Flag& j : std::vector<Flag>{{0}, {0, 1}, {0, 0, 1}}) {
        StratifiedSet k = standard_simplex(p, j);
        auto report = [&](const char* which, const ExPairing& ep) {
            const std::string where = std::string(which) + " on simplex" + fmt(*p, j);
            o.check(ep.pairing.unpaired.empty(),
                    where + ": " + std::to_string(ep.pairing.unpaired.size()) + " unpaired simplices");
            o.check(ep.check.all(), where + ": " + ep.check.detail);
        };
        report("naive", build_pairing_ex_naiv(k, 2, budget));
        report("conjugated", build_pairing_ex(k, 2, cache, budget));
    }
    return o;
}

Outcome probe_criterion(std::uint64_t budget) {
    PosetPtr p = chain3();
    SdPCache cache(p);
    Outcome o;
    for (const auto& e : standard_corpus(p)) {
        StratifiedSubdivision s = sd_p(e.set, cache);
        ProbeReport r = probe(s.set, e.set, lv_p(e.set, s, cache), 2);
        o.check(!r.refuted(), "lv_P refuted on " + e.name);
    }
    for (const Flag& j : flags_up_to(*p, 3))
        for (int k = 0; k < static_cast<int>(j.size()); ++k) {
            if (j.size() < 2 || !is_admissible(j, k)) continue;
            StratifiedInclusion h = horn(p, j, k);
            StratifiedSet full = standard_simplex(p, j);
            const std::string where = "horn " + std::to_string(k) + " of " + fmt(*p, j);
            o.check(!probe(h.sub, full, h.inclusion, 2).refuted(), where + " refuted");
            o.check(is_stratified_homotopy_equivalence(h.sub, full, h.inclusion, budget),
                    where + " not a stratified homotopy equivalence");
        }
    const Flag top{0, 1, 2};
    StratifiedInclusion bd = boundary(p, top);
    ProbeReport r = probe(bd.sub, standard_simplex(p, top), bd.inclusion, 2);
    o.check(r.refuted() && *r.certificate() == top,
            "boundary inclusion gave " + r.verdict() + (r.certificate() ? " at " + fmt(*p, *r.certificate()) : ""));
    return o;
}

bool is_link_iso(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f) {
    return a.size() == b.size() && is_injective_map(a, f);
}

Outcome horn_link_criterion() {
    PosetPtr p = chain3();
    Outcome o;
    for (const Flag& j : flags_up_to(*p, 4))
        for (int k = 0; k < static_cast<int>(j.size()); ++k) {
            if (j.size() < 2 || !is_admissible(j, k)) continue;
            StratifiedInclusion h = horn(p, j, k);
            StratifiedSet full = standard_simplex(p, j);
            for (const Flag& i : regular_flags(*p)) {
                Link a = link(h.sub, i), b = link(full, i);
                SimplicialMap m = link_map(h.sub, a, full, b, h.inclusion);
                const int top = std::max({a.set().dim(), b.set().dim(), 0});
                bool ok = is_link_iso(a.set(), b.set(), m) ||
                          (homology(a.set(), top).is_point() && homology(b.set(), top).is_point());
                o.check(ok, "horn " + std::to_string(k) + " of " + fmt(*p, j) + " at " + fmt(*p, i));
            }
        }
    return o;
}

// d_i d_j = d_{j-1} d_i (i < j), d_i s_j = s_{j-1} d_i (i < j),
// d_j s_j = d_{j+1} s_j = id, d_i s_j = s_j d_{i-1} (i > j + 1),
// s_i s_j = s_{j+1} s_i (i <= j), on every simplex up to dimension 3.
void check_identities(Outcome& o, const std::string& name, const SimplicialSet& x) {
    for (int n = 0; n <= 3; ++n)
        for (const SimplexRef& s : x.all_simplices(n)) {
            auto bad = [&](const char* rule) { return name + ": " + rule + " fails in degree " + std::to_string(n); };
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i < j && n >= 2; ++i)
                    o.check(x.face(x.face(s, j), i) == x.face(x.face(s, i), j - 1), bad("dd"));
            for (int j = 0; j <= n; ++j) {
                SimplexRef sj = x.degeneracy(s, j);
                o.check(x.face(sj, j) == s && x.face(sj, j + 1) == s, bad("ds=id"));
                for (int i = 0; i < j; ++i) o.check(x.face(sj, i) == x.degeneracy(x.face(s, i), j - 1), bad("ds<"));
                for (int i = j + 2; i <= n + 1; ++i)
                    o.check(x.face(sj, i) == x.degeneracy(x.face(s, i - 1), j), bad("ds>"));
                for (int i = 0; i <= j; ++i)
                    o.check(x.degeneracy(x.degeneracy(s, j), i) == x.degeneracy(x.degeneracy(s, i), j + 1), bad("ss"));
            }
        }
}

Outcome engine_criterion() {
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        OrderedComplex simplex = standard_simplex_complex(n);
        HomologyReport h = homology(simplex.set(), n);
        o.check(h.is_point(), "H(Delta^" + std::to_string(n) + ") = " + h.to_string());
        o.check(homology(sd(simplex.set()).set, n) == h, "sd changes H(Delta^" + std::to_string(n) + ")");
        if (n == 0) continue;
        std::vector<std::vector<int>> facets;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> f;
            for (int v = 0; v <= n; ++v)
                if (v != i) f.push_back(v);
            facets.push_back(f);
        }
        OrderedComplex bd(n + 1, facets);
        HomologyReport hb = homology(bd.set(), n);
        HomologyReport sphere;
        sphere.valid_up_to = n;
        sphere.betti.assign(n + 1, 0);
        sphere.torsion.assign(n + 1, {});
        sphere.betti[0] += 1;
        sphere.betti[n - 1] += 1;
        o.check(hb == sphere, "H(boundary Delta^" + std::to_string(n) + ") = " + hb.to_string());
        o.check(homology(sd(bd.set()).set, n) == hb, "sd changes H(boundary Delta^" + std::to_string(n) + ")");
        check_identities(o, "boundary Delta^" + std::to_string(n), bd.set());
    }
    OrderedComplex edge = standard_simplex_complex(1);
    Product sq = product(edge.set(), edge.set());
    o.check(sq.set.counts() == std::vector<int>{4, 5, 2}, "Delta^1 x Delta^1 has the wrong simplex counts");
    check_identities(o, "Delta^1 x Delta^1", sq.set);
    check_identities(o, "Delta^3", standard_simplex_complex(3).set());
    PosetPtr p = chain3();
    for (const auto& e : standard_corpus(p)) {
        o.check(homology(sd(e.set.carrier).set, 2) == homology(e.set.carrier, 2), "sd changes H of " + e.name);
        check_identities(o, e.name, e.set.carrier);
    }
    return o;
}

struct CriterionInfo {
    const char* title;
    double limit;
    std::function<Outcome(std::uint64_t)> run;
};

const CriterionInfo& info_of(int id) {
    static const std::vector<CriterionInfo> infos{
        {"j/r/sd_P identity suite for flags of length <= 4", 60, [](std::uint64_t) { return identities_criterion(); }},
        {"t_J surjective through dimension 3", 60, [](std::uint64_t) { return surjectivity_criterion(); }},
        {"boundary versus simplex holinks and links", 10, boundary_holink_criterion},
        {"link and holink agree on the corpus", 600, link_holink_criterion},
        {"verticalized labelled subdivision is sd_P", 60, vertical_criterion},
        {"U is cofibrant, C_P U = V, round trip", 60, cofibrancy_criterion},
        {"pairings are proper, admissible and regular", 300, pairing_criterion},
        {"weak-equivalence probes", 300, probe_criterion},
        {"horn links are isomorphic or acyclic", 120, [](std::uint64_t) { return horn_link_criterion(); }},
        {"core simplicial engine", 10, [](std::uint64_t) { return engine_criterion(); }},
    };
    require(id >= 1 && id <= kNumCriteria, ErrorKind::OutOfRange, "criterion id out of range");
    return infos[id - 1];
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t budget) {
    const CriterionInfo& s = info_of(id);
    CriterionResult r{id, s.title, false, 0, s.limit, {}};
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = s.run(budget);
        r.pass = o.failed == 0;
        r.detail = o.summary();
    } catch (const Error& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds > r.limit_seconds) {
        r.pass = false;
        r.detail += ", over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_audit(const std::vector<int>& ids, std::uint64_t budget) {
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id, budget));
    return out;
}

}  // namespace stratkit
