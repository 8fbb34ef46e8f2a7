#include "stratkit/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stratkit/constructions.hpp"
#include "stratkit/links.hpp"

namespace stratkit {

int Diagram::index_of(const Flag& f) const {
    auto it = std::find(flags.begin(), flags.end(), f);
    return it == flags.end() ? -1 : static_cast<int>(it - flags.begin());
}

void Diagram::validate() const {
    const int m = static_cast<int>(flags.size());
    require(static_cast<int>(values.size()) == m, ErrorKind::Malformed, "one value per flag required");
    for (int s = 0; s < m; ++s)
        for (int b = 0; b < m; ++b) {
            if (s == b || !flag_subflag(flags[s], flags[b])) continue;
            auto it = restriction.find({s, b});
            require(it != restriction.end(), ErrorKind::Malformed,
                    "missing restriction " + poset->format_flag(flags[s]) + "<=" + poset->format_flag(flags[b]));
            require(is_valid_map(values[b], values[s], it->second), ErrorKind::Malformed,
                    "restriction " + poset->format_flag(flags[s]) + "<=" + poset->format_flag(flags[b]) +
                        " is not simplicial");
        }
    for (int s = 0; s < m; ++s)
        for (int mid = 0; mid < m; ++mid)
            for (int b = 0; b < m; ++b) {
                if (s == mid || mid == b || !flag_subflag(flags[s], flags[mid]) || !flag_subflag(flags[mid], flags[b]))
                    continue;
                require(compose(values[s], restrict_map(s, mid), restrict_map(mid, b)) == restrict_map(s, b),
                        ErrorKind::Malformed, "restrictions do not compose");
            }
}

Diagram empty_diagram(PosetPtr p) {
    Diagram d;
    d.flags = regular_flags(*p);
    d.poset = std::move(p);
    d.values.resize(d.flags.size());
    const int m = static_cast<int>(d.flags.size());
    for (int s = 0; s < m; ++s)
        for (int b = 0; b < m; ++b)
            if (s != b && flag_subflag(d.flags[s], d.flags[b])) d.restriction[{s, b}] = SimplicialMap{};
    return d;
}

bool is_natural(const Diagram& f, const Diagram& g, const DiagramMap& m) {
    if (m.component.size() != f.flags.size()) return false;
    for (size_t x = 0; x < f.flags.size(); ++x)
        if (!is_valid_map(f.values[x], g.values[x], m.component[x])) return false;
    for (const auto& [key, rf] : f.restriction) {
        auto [s, b] = key;
        if (compose(g.values[s], m.component[s], rf) != compose(g.values[s], g.restrict_map(s, b), m.component[b]))
            return false;
    }
    return true;
}

DiagramMap identity_diagram_map(const Diagram& f) {
    DiagramMap m;
    for (const auto& v : f.values) m.component.push_back(identity_map(v));
    return m;
}

namespace {

const SimplicialMap& restriction_or_identity(const Diagram& f, int s, int b, SimplicialMap& scratch) {
    if (s != b) return f.restrict_map(s, b);
    scratch = identity_map(f.values[s]);
    return scratch;
}

std::set<int> image_ids(const SimplicialMap& m) {
    std::set<int> out;
    for (const auto& r : m.image) out.insert(r.nd);
    return out;
}

Flag flag_union(const Flag& a, const Flag& b) {
    Flag u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

}  // namespace

CofibrancyReport is_cofibrant(const Diagram& f) {
    CofibrancyReport rep;
    const auto& p = *f.poset;
    for (const auto& [key, m] : f.restriction) {
        if (!is_injective_map(f.values[key.second], m)) {
            rep.cofibrant = false;
            rep.certificate = "restriction " + p.format_flag(f.flags[key.first]) + "<=" +
                              p.format_flag(f.flags[key.second]) + " is not a monomorphism";
            return rep;
        }
    }
    const int n = static_cast<int>(f.flags.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Flag meet;
            for (int e : f.flags[a])
                if (std::find(f.flags[b].begin(), f.flags[b].end(), e) != f.flags[b].end()) meet.push_back(e);
            if (meet.empty()) continue;
            // Sort by rank so the meet is listed as a regular flag.
            std::sort(meet.begin(), meet.end(), [&](int x, int y) { return p.rank(x) < p.rank(y); });
            const int i0 = f.index_of(meet);
            SimplicialMap s1, s2;
            auto in_a = image_ids(restriction_or_identity(f, i0, a, s1));
            auto in_b = image_ids(restriction_or_identity(f, i0, b, s2));
            std::set<int> both;
            std::set_intersection(in_a.begin(), in_a.end(), in_b.begin(), in_b.end(),
                                  std::inserter(both, both.begin()));
            Flag u = flag_union(f.flags[a], f.flags[b]);
            std::sort(u.begin(), u.end(), [&](int x, int y) { return p.rank(x) < p.rank(y); });
            std::set<int> expected;
            const int i3 = p.is_regular(u) ? f.index_of(u) : -1;
            if (i3 >= 0) {
                SimplicialMap s3;
                expected = image_ids(restriction_or_identity(f, i0, i3, s3));
            }
            if (both != expected) {
                rep.cofibrant = false;
                rep.certificate = "intersection of " + p.format_flag(f.flags[a]) + " and " + p.format_flag(f.flags[b]) +
                                  (i3 >= 0 ? " differs from the value at their union" : " is non-empty");
                return rep;
            }
        }
    return rep;
}

Diagram generator(PosetPtr p, const SimplicialSet& s, const Flag& i) {
    Diagram d = empty_diagram(p);
    for (size_t x = 0; x < d.flags.size(); ++x)
        if (flag_subflag(d.flags[x], i)) d.values[x] = s;
    for (auto& [key, m] : d.restriction)
        if (flag_subflag(d.flags[key.second], i)) m = identity_map(s);
    return d;
}

CpResult c_p(const Diagram& f) {
    std::deque<StratifiedSet> store;
    std::vector<const SimplicialSet*> objects;
    std::vector<ColimitArrow> arrows;
    std::map<std::pair<int, int>, int> piece_of;  // (flag, nd) -> object
    std::vector<std::pair<int, int>> piece_cell;
    auto arity = [&](int x) { return static_cast<int>(f.flags[x].size()) - 1; };
    for (size_t x = 0; x < f.flags.size(); ++x)
        for (int s = 0; s < f.values[x].size(); ++s) {
            store.push_back(flag_cylinder(f.poset, f.flags[x], f.values[x][s].dim));
            piece_of[{static_cast<int>(x), s}] = static_cast<int>(objects.size());
            objects.push_back(&store.back().carrier);
            piece_cell.emplace_back(static_cast<int>(x), s);
        }
    auto add_glue = [&](StratifiedSet glue, int into_a, SimplicialMap ma, int into_b, SimplicialMap mb) {
        store.push_back(std::move(glue));
        const int obj = static_cast<int>(objects.size());
        objects.push_back(&store.back().carrier);
        arrows.push_back(ColimitArrow{obj, into_a, std::move(ma)});
        arrows.push_back(ColimitArrow{obj, into_b, std::move(mb)});
    };
    for (size_t x = 0; x < f.flags.size(); ++x) {
        const int a = arity(static_cast<int>(x));
        const SimplicialSet& v = f.values[x];
        for (int s = 0; s < v.size(); ++s) {
            const int n = v[s].dim;
            if (n == 0) continue;
            for (int i = 0; i <= n; ++i) {
                const auto& face = v[s].faces[i];
                Op theta = surjection_from_word(v[face.nd].dim, face.degen);
                add_glue(flag_cylinder(f.poset, f.flags[x], n - 1), piece_of.at({static_cast<int>(x), s}),
                         cylinder_map(a, n - 1, a, n, identity_op(a), coface_op(n, i)),
                         piece_of.at({static_cast<int>(x), face.nd}),
                         cylinder_map(a, n - 1, a, v[face.nd].dim, identity_op(a), theta));
            }
        }
    }
    for (const auto& [key, m] : f.restriction) {
        auto [sm, bg] = key;
        const Flag& small = f.flags[sm];
        const Flag& big = f.flags[bg];
        Op incl;
        for (int e : small) incl.push_back(static_cast<int>(std::find(big.begin(), big.end(), e) - big.begin()));
        const int as = arity(sm), ab = arity(bg);
        for (int s = 0; s < f.values[bg].size(); ++s) {
            const int n = f.values[bg][s].dim;
            const SimplexRef& r = m.image[s];
            Op theta = surjection_from_word(f.values[sm][r.nd].dim, r.degen);
            add_glue(flag_cylinder(f.poset, small, n), piece_of.at({bg, s}),
                     cylinder_map(as, n, ab, n, incl, identity_op(n)), piece_of.at({sm, r.nd}),
                     cylinder_map(as, n, as, f.values[sm][r.nd].dim, identity_op(as), theta));
        }
    }
    Colimit c = colimit(objects, arrows);
    CpResult out;
    out.set.poset = f.poset;
    out.set.carrier = c.set;
    for (const auto& [obj, t] : c.origin) {
        out.set.flags.push_back(store[obj].flags[t]);
        out.cell.push_back(piece_cell.at(obj));
    }
    out.set.validate();
    return out;
}

bool LevelwiseReport::passes() const {
    return std::all_of(levels.begin(), levels.end(), [](const LevelVerdict& v) { return v.passes(); });
}

std::optional<Flag> LevelwiseReport::certificate() const {
    for (const auto& v : levels)
        if (!v.passes()) return v.flag;
    return std::nullopt;
}

bool pi0_bijective(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f) {
    int ca = 0, cb = 0;
    auto comp_a = vertex_components(a, &ca);
    auto comp_b = vertex_components(b, &cb);
    if (ca != cb) return false;
    std::vector<int> to(ca, -1);
    std::vector<char> hit(cb, 0);
    for (int v = 0; v < a.size(); ++v) {
        if (a[v].dim != 0) continue;
        int w = comp_b[f.image[v].nd];
        int& slot = to[comp_a[v]];
        if (slot < 0) {
            if (hit[w]) return false;
            slot = w;
            hit[w] = 1;
        }
    }
    return true;
}

LevelwiseReport levelwise_compare(const Diagram& f, const Diagram& g, const DiagramMap& m, int max_deg) {
    LevelwiseReport rep;
    for (size_t x = 0; x < f.flags.size(); ++x) {
        LevelVerdict v;
        v.flag = f.flags[x];
        v.pi0_bijective = pi0_bijective(f.values[x], g.values[x], m.component[x]);
        v.source = homology(f.values[x], max_deg);
        v.target = homology(g.values[x], max_deg);
        v.homology_iso = induces_homology_iso(f.values[x], g.values[x], m.component[x], max_deg);
        rep.levels.push_back(std::move(v));
    }
    return rep;
}

}  // namespace stratkit
