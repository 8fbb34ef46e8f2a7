#include "stratkit/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace stratkit {

namespace {

Op surj_of(const SimplicialSet& s, const SimplexRef& x) {
    return surjection_from_word(s[x.nd].dim, x.degen);
}

// Lattice paths (theta1, theta2) : [m] -> [a] x [b], jointly injective,
// both surjective.
void lattice_paths(int m, int a, int b, std::vector<std::pair<Op, Op>>& out) {
    Op t1{0}, t2{0};
    std::function<void()> walk = [&]() {
        const int len = static_cast<int>(t1.size());
        if (len == m + 1) {
            if (t1.back() == a && t2.back() == b) out.emplace_back(t1, t2);
            return;
        }
        const int remaining = m + 1 - len;
        for (int di = 0; di <= 1; ++di)
            for (int dj = 0; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) continue;
                int i = t1.back() + di, j = t2.back() + dj;
                if (i > a || j > b) continue;
                // Each remaining step advances by at most one per coordinate
                // and at least one overall.
                if (a - i > remaining - 1 || b - j > remaining - 1) continue;
                if ((a - i) + (b - j) < remaining - 1) continue;
                t1.push_back(i);
                t2.push_back(j);
                walk();
                t1.pop_back();
                t2.pop_back();
            }
    };
    if (m == 0) {
        if (a == 0 && b == 0) out.emplace_back(t1, t2);
        return;
    }
    walk();
}

}  // namespace

SimplexRef Product::pair(const SimplicialSet& xs, const SimplicialSet& ys, const SimplexRef& u,
                         const SimplexRef& v) const {
    Op tu = surj_of(xs, u), tv = surj_of(ys, v);
    require(tu.size() == tv.size(), ErrorKind::Internal, "pair of unequal dimensions");
    const int m = static_cast<int>(tu.size()) - 1;
    Op gamma(m + 1, 0);
    for (int p = 0; p < m; ++p) {
        bool common = tu[p] == tu[p + 1] && tv[p] == tv[p + 1];
        gamma[p + 1] = gamma[p] + (common ? 0 : 1);
    }
    Op tu2(gamma.back() + 1), tv2(gamma.back() + 1);
    for (int p = 0; p <= m; ++p) {
        tu2[gamma[p]] = tu[p];
        tv2[gamma[p]] = tv[p];
    }
    auto it = index.find({u.nd, word_from_surjection(tu2), v.nd, word_from_surjection(tv2)});
    require(it != index.end(), ErrorKind::Internal, "product simplex missing");
    return SimplexRef{it->second, word_from_surjection(gamma)};
}

Product product(const SimplicialSet& x, const SimplicialSet& y) {
    Product out;
    if (x.empty() || y.empty()) return out;
    const int top = x.dim() + y.dim();
    out.pr1.image.clear();
    for (int m = 0; m <= top; ++m) {
        for (int a_id = 0; a_id < x.size(); ++a_id) {
            const int a = x[a_id].dim;
            if (a > m) continue;
            for (int b_id = 0; b_id < y.size(); ++b_id) {
                const int b = y[b_id].dim;
                if (b > m || a + b < m) continue;
                std::vector<std::pair<Op, Op>> paths;
                lattice_paths(m, a, b, paths);
                for (const auto& [t1, t2] : paths) {
                    SimplexRef u{a_id, word_from_surjection(t1)}, v{b_id, word_from_surjection(t2)};
                    std::vector<SimplexRef> faces;
                    if (m > 0)
                        for (int i = 0; i <= m; ++i)
                            faces.push_back(out.pair(x, y, x.face(u, i), y.face(v, i)));
                    int id = out.set.add(m, std::move(faces));
                    out.index[{a_id, u.degen, b_id, v.degen}] = id;
                    out.pr1.image.push_back(u);
                    out.pr2.image.push_back(v);
                }
            }
        }
    }
    return out;
}

Colimit colimit(const std::vector<const SimplicialSet*>& objects, const std::vector<ColimitArrow>& arrows) {
    Colimit out;
    const int nobj = static_cast<int>(objects.size());
    std::vector<int> offset(nobj + 1, 0);
    int maxdim = -1;
    for (int a = 0; a < nobj; ++a) {
        offset[a + 1] = offset[a] + objects[a]->size();
        maxdim = std::max(maxdim, objects[a]->dim());
    }
    const int total = offset[nobj];
    std::vector<SimplexRef> rep(total);
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int g) {
        while (parent[g] != g) g = parent[g] = parent[parent[g]];
        return g;
    };
    std::vector<std::vector<SimplexRef>> anchors(total);
    std::vector<std::pair<int, int>> owner(total);
    for (int a = 0; a < nobj; ++a)
        for (int z = 0; z < objects[a]->size(); ++z) owner[offset[a] + z] = {a, z};

    for (int d = 0; d <= maxdim; ++d) {
        for (const auto& arr : arrows) {
            const SimplicialSet& src = *objects[arr.from];
            const SimplicialSet& tgt = *objects[arr.to];
            for (int z = 0; z < src.size(); ++z) {
                if (src[z].dim != d) continue;
                const SimplexRef& img = arr.map.image.at(z);
                const int g = offset[arr.from] + z;
                if (!img.degenerate()) {
                    int r1 = root(g), r2 = root(offset[arr.to] + img.nd);
                    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
                } else {
                    const SimplexRef& w = rep[offset[arr.to] + img.nd];
                    anchors[g].push_back(
                        out.set.apply(w, surjection_from_word(tgt[img.nd].dim, img.degen)));
                }
            }
        }
        // Collect classes of dimension d in order of their smallest member.
        std::vector<std::vector<int>> members(total);
        std::vector<int> roots;
        for (int g = 0; g < total; ++g) {
            auto [a, z] = owner[g];
            if ((*objects[a])[z].dim != d) continue;
            int r = root(g);
            if (members[r].empty()) roots.push_back(r);
            members[r].push_back(g);
        }
        std::sort(roots.begin(), roots.end(), [&](int r1, int r2) { return members[r1][0] < members[r2][0]; });
        for (int r : roots) {
            const auto& mem = members[r];
            const SimplexRef* anchor = nullptr;
            for (int g : mem)
                for (const auto& an : anchors[g]) {
                    if (!anchor) anchor = &an;
                    require(*anchor == an, ErrorKind::Internal, "colimit: inconsistent collapse");
                }
            SimplexRef value;
            if (anchor) {
                value = *anchor;
            } else {
                auto [a, z] = owner[mem[0]];
                const SimplicialSet& s = *objects[a];
                std::vector<SimplexRef> faces;
                for (const auto& f : s[z].faces)
                    faces.push_back(out.set.apply(rep[offset[a] + f.nd], surjection_from_word(s[f.nd].dim, f.degen)));
                int id = out.set.add(d, std::move(faces));
                out.origin.emplace_back(a, z);
                value = SimplexRef{id, {}};
            }
            for (int g : mem) rep[g] = value;
        }
    }
    out.legs.resize(nobj);
    for (int a = 0; a < nobj; ++a)
        out.legs[a].image.assign(rep.begin() + offset[a], rep.begin() + offset[a + 1]);
    return out;
}

SimplicialMap map_from_colimit(const Colimit& c, const std::function<SimplexRef(int, int)>& leg_image) {
    SimplicialMap f;
    f.image.reserve(c.origin.size());
    for (const auto& [a, z] : c.origin) f.image.push_back(leg_image(a, z));
    return f;
}

Colimit colimit_over_simplices(const SimplicialSet& x, const PieceFunctions& fns) {
    std::vector<const SimplicialSet*> objects;
    std::vector<ColimitArrow> arrows;
    for (int y = 0; y < x.size(); ++y) objects.push_back(&fns.piece(y));
    for (int y = 0; y < x.size(); ++y) {
        if (x[y].dim == 0) continue;
        for (int i = 0; i <= x[y].dim; ++i) {
            const int obj = static_cast<int>(objects.size());
            objects.push_back(&fns.glue(y, i));
            arrows.push_back(ColimitArrow{obj, y, fns.glue_into_self(y, i)});
            arrows.push_back(ColimitArrow{obj, x[y].faces[i].nd, fns.glue_into_face(y, i)});
        }
    }
    return colimit(objects, arrows);
}

SimplicialMap op_map(const Op& alpha) {
    const int m = static_cast<int>(alpha.size()) - 1;
    const int n = alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
    OrderedComplex src = standard_simplex_complex(m);
    OrderedComplex tgt = standard_simplex_complex(std::max(n, 0));
    return src.vertex_map(tgt, [&](int v) { return alpha[v]; });
}

namespace {

// sd(alpha) : sd(Delta^m) -> sd(Delta^n).
SimplicialMap sd_op_map(const Op& alpha, int n) {
    const SdSimplex& src = sd_simplex(static_cast<int>(alpha.size()) - 1);
    const SdSimplex& tgt = sd_simplex(n);
    return src.complex.vertex_map(tgt.complex, [&](int v) {
        return tgt.vertex_of_mask.at(image_mask(src.masks[v], alpha));
    });
}

std::vector<unsigned> masks_of(const SdSimplex& s, int nd) {
    std::vector<unsigned> out;
    for (int v : s.complex.tuple(nd)) out.push_back(s.masks[v]);
    return out;
}

}  // namespace

Subdivision sd(const SimplicialSet& x) {
    Subdivision out;
    std::map<std::pair<int, int>, Op> face_ops;
    PieceFunctions fns;
    fns.piece = [&](int y) -> const SimplicialSet& { return sd_simplex(x[y].dim).complex.set(); };
    fns.glue = [&](int y, int) -> const SimplicialSet& { return sd_simplex(x[y].dim - 1).complex.set(); };
    fns.glue_into_self = [&](int y, int i) { return sd_op_map(coface_op(x[y].dim, i), x[y].dim); };
    fns.glue_into_face = [&](int y, int i) {
        const auto& f = x[y].faces[i];
        return sd_op_map(surjection_from_word(x[f.nd].dim, f.degen), x[f.nd].dim);
    };
    out.colim = colimit_over_simplices(x, fns);
    out.set = out.colim.set;
    for (int c = 0; c < out.set.size(); ++c) {
        auto [y, t] = out.colim.origin[c];
        const SdSimplex& piece = sd_simplex(x[y].dim);
        out.carrier.push_back(y);
        out.chain.push_back(masks_of(piece, t));
    }
    out.barycentre_of.assign(out.set.size(), -1);
    for (int c = 0; c < out.set.size(); ++c) {
        if (out.set[c].dim != 0) continue;
        SimplexRef face = x.apply(SimplexRef{out.carrier[c], {}}, mask_to_op(out.chain[c][0]));
        out.barycentre_of[c] = face.nd;
    }
    return out;
}

SimplicialMap sd_map(const SimplicialSet& x, const Subdivision& sdx, const SimplicialSet& y,
                     const Subdivision& sdy, const SimplicialMap& f) {
    (void)y;
    return map_from_colimit(sdx.colim, [&](int obj, int t) {
        const int n = x[obj].dim;
        const SimplexRef& img = f.image[obj];
        const int k = y[img.nd].dim;
        Op theta = surjection_from_word(k, img.degen);
        const SdSimplex& src = sd_simplex(n);
        const SdSimplex& tgt = sd_simplex(k);
        std::vector<int> tuple;
        for (int v : src.complex.tuple(t)) tuple.push_back(tgt.vertex_of_mask.at(image_mask(src.masks[v], theta)));
        SimplexRef r = tgt.complex.ref(tuple);
        return sdy.colim.legs[img.nd](sdy.set, r);
    });
}

SimplicialMap last_vertex(const SimplicialSet& x, const Subdivision& sdx) {
    return map_from_colimit(sdx.colim, [&](int obj, int t) {
        const SdSimplex& piece = sd_simplex(x[obj].dim);
        Op alpha;
        for (int v : piece.complex.tuple(t)) alpha.push_back(31 - std::countl_zero(piece.masks[v]));
        return x.apply(SimplexRef{obj, {}}, alpha);
    });
}

}  // namespace stratkit
