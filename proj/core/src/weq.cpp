#include "stratkit/weq.hpp"

#include <sstream>

#include "stratkit/links.hpp"

namespace stratkit {

bool ProbeReport::refuted() const { return certificate().has_value(); }

std::optional<Flag> ProbeReport::certificate() const {
    for (const auto& l : levels)
        if (!l.passes()) return l.flag;
    return std::nullopt;
}

std::string ProbeReport::verdict() const { return refuted() ? "refuted" : "passes-all-probes"; }

std::string ProbeReport::to_text(const Poset& p) const {
    std::ostringstream os;
    os << "# mode " << (mode == ProbeMode::Link ? "link" : "holink") << ", homology through degree " << max_deg
       << '\n';
    for (const auto& l : levels)
        os << p.format_flag(l.flag) << "\tpi0 " << (l.pi0_bijective ? "bijective" : "not-bijective") << "\tH "
           << (l.homology_iso ? "iso" : "not-iso") << "\tsource " << l.source.to_string() << "\ttarget "
           << l.target.to_string() << '\n';
    os << "verdict " << verdict();
    if (auto c = certificate()) os << " certificate " << p.format_flag(*c);
    os << '\n';
    return os.str();
}

namespace {

LevelVerdict judge(const Flag& flag, const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f,
                   int max_deg) {
    LevelVerdict v;
    v.flag = flag;
    v.pi0_bijective = pi0_bijective(a, b, f);
    v.homology_iso = induces_homology_iso(a, b, f, max_deg);
    v.source = homology(a, max_deg);
    v.target = homology(b, max_deg);
    return v;
}

}  // namespace

ProbeReport probe(const StratifiedSet& k, const StratifiedSet& l, const SimplicialMap& f, int max_deg,
                  ProbeMode mode, int truncation, std::uint64_t budget) {
    require(is_stratified_map(k, l, f), ErrorKind::Malformed, "probe needs a stratified map");
    ProbeReport rep;
    rep.mode = mode;
    rep.max_deg = max_deg;
    for (const Flag& i : regular_flags(*k.poset)) {
        if (mode == ProbeMode::Link) {
            Link a = link(k, i), b = link(l, i);
            rep.levels.push_back(judge(i, a.set(), b.set(), link_map(k, a, l, b, f), max_deg));
        } else {
            // Homology of a truncation is exact only below the top level.
            require(max_deg < truncation, ErrorKind::Malformed, "holink probes need max_deg < truncation");
            Holink a = holink(k, i, truncation, budget), b = holink(l, i, truncation, budget);
            rep.levels.push_back(judge(i, a.set(), b.set(), holink_map(a, b, l, f), max_deg));
        }
    }
    return rep;
}

ProbeReport probe_diagram(const Diagram& f, const Diagram& g, const DiagramMap& m, int max_deg) {
    ProbeReport rep;
    rep.mode = ProbeMode::Holink;
    rep.max_deg = max_deg;
    rep.levels = levelwise_compare(f, g, m, max_deg).levels;
    return rep;
}

}  // namespace stratkit
