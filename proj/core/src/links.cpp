#include "stratkit/links.hpp"

#include <algorithm>

#include "stratkit/ordered_complex.hpp"

namespace stratkit {

Link link(const StratifiedSet& k, const Flag& i) {
    Link out{i, sd(k.carrier), {}};
    const SimplicialSet& s = out.sd.set;
    std::vector<char> vertex_over(s.size(), 0);
    for (int c = 0; c < s.size(); ++c)
        if (s[c].dim == 0) vertex_over[c] = underlying_regular(k.flags[out.sd.barycentre_of[c]]) == i;
    std::vector<char> keep(s.size(), 0);
    for (int c = 0; c < s.size(); ++c) {
        bool all = true;
        for (int v : s.vertices(c)) all = all && vertex_over[v];
        keep[c] = all;
    }
    out.sub = subcomplex(s, keep);
    return out;
}

SimplicialMap link_map(const StratifiedSet& k, const Link& lk, const StratifiedSet& l, const Link& ll,
                       const SimplicialMap& f) {
    SimplicialMap sdf = sd_map(k.carrier, lk.sd, l.carrier, ll.sd, f);
    SimplicialMap out;
    for (const auto& inc : lk.sub.inclusion.image) {
        const SimplexRef& r = sdf.image[inc.nd];
        const int id = ll.sub.new_id[r.nd];
        require(id >= 0, ErrorKind::Malformed, "link map leaves the link: map is not stratified");
        out.image.push_back(SimplexRef{id, r.degen});
    }
    return out;
}

int Holink::index(int n, const SimplicialMap& h) const {
    const auto& lv = level.at(n);
    auto it = std::lower_bound(lv.begin(), lv.end(), h);
    if (it == lv.end() || *it != h) return -1;
    return static_cast<int>(it - lv.begin());
}

StratifiedSet flag_cylinder(const PosetPtr& p, const Flag& i, int n) {
    const int a = static_cast<int>(i.size()) - 1;
    OrderedComplex g = grid_complex(a, n);
    std::vector<int> strata;
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= n; ++y) strata.push_back(i[x]);
    return stratify_by_vertices(p, g.set(), strata);
}

SimplicialMap cylinder_map(int a_src, int n_src, int a_tgt, int n_tgt, const Op& alpha_x, const Op& alpha_y) {
    OrderedComplex src = grid_complex(a_src, n_src);
    OrderedComplex tgt = grid_complex(a_tgt, n_tgt);
    return src.vertex_map(tgt, [&](int v) {
        const int x = v / (n_src + 1), y = v % (n_src + 1);
        return alpha_x[x] * (n_tgt + 1) + alpha_y[y];
    });
}

Holink holink(const StratifiedSet& k, const Flag& i, int truncation, std::uint64_t budget) {
    require(truncation >= 0, ErrorKind::OutOfRange, "negative truncation");
    require(k.poset->is_regular(i), ErrorKind::Malformed, "holink needs a regular flag");
    Holink out;
    out.flag = i;
    out.truncation = truncation;
    const int a = static_cast<int>(i.size()) - 1;
    for (int n = 0; n <= truncation; ++n) {
        auto maps = enumerate_stratified_maps(flag_cylinder(k.poset, i, n), k, budget);
        std::sort(maps.begin(), maps.end());
        out.level.push_back(std::move(maps));
    }
    std::vector<std::vector<SimplicialMap>> face_ops(truncation + 1), degen_ops(truncation + 1);
    for (int n = 1; n <= truncation; ++n)
        for (int j = 0; j <= n; ++j) face_ops[n].push_back(cylinder_map(a, n - 1, a, n, identity_op(a), coface_op(n, j)));
    for (int n = 0; n < truncation; ++n)
        for (int j = 0; j <= n; ++j)
            degen_ops[n].push_back(cylinder_map(a, n + 1, a, n, identity_op(a), codegeneracy_op(n, j)));

    LevelData data;
    for (const auto& lv : out.level) data.count.push_back(static_cast<int>(lv.size()));
    data.face = [&](int n, int x, int j) {
        int r = out.index(n - 1, compose(k.carrier, out.level[n][x], face_ops[n][j]));
        require(r >= 0, ErrorKind::Internal, "holink face missing");
        return r;
    };
    data.degeneracy = [&](int n, int x, int j) {
        int r = out.index(n + 1, compose(k.carrier, out.level[n][x], degen_ops[n][j]));
        require(r >= 0, ErrorKind::Internal, "holink degeneracy missing");
        return r;
    };
    out.lw = from_levels(data);
    return out;
}

SimplicialMap holink_map(const Holink& a, const Holink& b, const StratifiedSet& l, const SimplicialMap& f) {
    SimplicialMap out;
    for (const auto& [n, x] : a.lw.origin) {
        int y = b.index(n, compose(l.carrier, f, a.level[n][x]));
        require(y >= 0, ErrorKind::Malformed, "holink map: composite is not stratified");
        out.image.push_back(b.lw.ref[n][y]);
    }
    return out;
}

SimplicialMap holink_restriction(const Holink& big, const Holink& small, const StratifiedSet& k) {
    require(flag_subflag(small.flag, big.flag), ErrorKind::Malformed, "restriction needs a subflag");
    Op incl;
    for (int e : small.flag)
        incl.push_back(static_cast<int>(std::find(big.flag.begin(), big.flag.end(), e) - big.flag.begin()));
    const int as = static_cast<int>(small.flag.size()) - 1, ab = static_cast<int>(big.flag.size()) - 1;
    const int top = std::min(big.truncation, small.truncation);
    std::vector<SimplicialMap> pre;
    for (int n = 0; n <= top; ++n) pre.push_back(cylinder_map(as, n, ab, n, incl, identity_op(n)));
    SimplicialMap out;
    for (const auto& [n, x] : big.lw.origin) {
        require(n <= top, ErrorKind::Internal, "restriction beyond truncation");
        int y = small.index(n, compose(k.carrier, big.level[n][x], pre[n]));
        require(y >= 0, ErrorKind::Internal, "restricted holink simplex missing");
        out.image.push_back(small.lw.ref[n][y]);
    }
    return out;
}

HolinkDiagram diagram_d(const StratifiedSet& k, int truncation, std::uint64_t budget) {
    HolinkDiagram out;
    out.diagram = empty_diagram(k.poset);
    out.diagram.truncation = truncation;
    const auto& flags = out.diagram.flags;
    for (const auto& i : flags) out.holinks.push_back(holink(k, i, truncation, budget));
    for (size_t x = 0; x < flags.size(); ++x) out.diagram.values[x] = out.holinks[x].set();
    for (size_t s = 0; s < flags.size(); ++s)
        for (size_t b = 0; b < flags.size(); ++b)
            if (s != b && flag_subflag(flags[s], flags[b]))
                out.diagram.restriction[{static_cast<int>(s), static_cast<int>(b)}] =
                    holink_restriction(out.holinks[b], out.holinks[s], k);
    return out;
}

DiagramMap diagram_d_map(const HolinkDiagram& a, const HolinkDiagram& b, const StratifiedSet& l,
                         const SimplicialMap& f) {
    DiagramMap m;
    for (size_t x = 0; x < a.holinks.size(); ++x) m.component.push_back(holink_map(a.holinks[x], b.holinks[x], l, f));
    return m;
}

}  // namespace stratkit
