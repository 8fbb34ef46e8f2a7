#include "stratkit/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace stratkit {

namespace {

int top_index(unsigned mask) { return 31 - std::countl_zero(mask); }
unsigned interval_mask(int lo, int hi) {
    unsigned m = 0;
    for (int i = lo; i <= hi; ++i) m |= 1u << i;
    return m;
}

// Union over members of a vertex formula given on singletons.
unsigned extend_by_union(unsigned mask, const std::function<unsigned(int)>& on_point) {
    unsigned out = 0;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) out |= on_point(i);
    return out;
}

bool attained(const Flag& j, unsigned sigma, int q) {
    for (int i = 0; i < static_cast<int>(j.size()); ++i)
        if ((sigma & (1u << i)) && j[i] == q) return true;
    return false;
}

std::unique_ptr<SdPSimplex> build_sdp(const PosetPtr& p, const Flag& j) {
    require(!j.empty() && p->is_flag(j), ErrorKind::Malformed, "not a flag");
    const int n = static_cast<int>(j.size()) - 1;
    require(n < 16, ErrorKind::OutOfRange, "flag too long for sd_P");
    auto out = std::make_unique<SdPSimplex>();
    out->j = j;
    std::vector<SdPVertex> verts;
    for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
        std::vector<int> qs;
        for (int i = 0; i <= n; ++i)
            if (m & (1u << i)) qs.push_back(j[i]);
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        for (int q : qs) verts.emplace_back(m, q);
    }
    // A linear extension of the componentwise order.
    std::sort(verts.begin(), verts.end(), [&](const SdPVertex& a, const SdPVertex& b) {
        return std::make_tuple(std::popcount(a.first), p->rank(a.second), a.first, a.second) <
               std::make_tuple(std::popcount(b.first), p->rank(b.second), b.first, b.second);
    });
    out->vertex = verts;
    for (size_t v = 0; v < verts.size(); ++v) out->vertex_of[verts[v]] = static_cast<int>(v);

    const int nv = static_cast<int>(verts.size());
    auto below = [&](int a, int b) {
        const auto& [sa, qa] = verts[a];
        const auto& [sb, qb] = verts[b];
        return (sa & ~sb) == 0 && p->leq(qa, qb);
    };
    std::vector<std::vector<int>> maximal;
    std::vector<int> chain;
    std::function<void(unsigned)> extend = [&](unsigned base) {
        bool grown = false;
        for (int w = chain.back() + 1; w < nv; ++w) {
            if (!below(chain.back(), w) || !attained(j, base, verts[w].second)) continue;
            grown = true;
            chain.push_back(w);
            extend(base);
            chain.pop_back();
        }
        if (!grown) maximal.push_back(chain);
    };
    for (int v = 0; v < nv; ++v) {
        chain.assign(1, v);
        extend(verts[v].first);
    }
    out->complex = OrderedComplex(nv, maximal);
    std::vector<int> strata;
    for (const auto& v : verts) strata.push_back(v.second);
    out->strat = stratify_by_vertices(p, out->complex.set(), strata);
    return out;
}

}  // namespace

int SdPSimplex::find(const SdPVertex& v) const {
    auto it = vertex_of.find(v);
    return it == vertex_of.end() ? -1 : it->second;
}

const SdPSimplex& SdPCache::simplex(const Flag& j) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(j);
    if (it == cache_.end()) it = cache_.emplace(j, build_sdp(poset_, j)).first;
    return *it->second;
}

StratifiedSet naive_simplex(PosetPtr p, const Flag& j) {
    const SdSimplex& s = sd_simplex(static_cast<int>(j.size()) - 1);
    std::vector<int> strata;
    for (unsigned m : s.masks) strata.push_back(j[top_index(m)]);
    return stratify_by_vertices(std::move(p), s.complex.set(), strata);
}

std::optional<SimplicialMap> sdp_vertex_map(const SdPSimplex& src, const SdPSimplex& tgt,
                                            const std::function<SdPVertex(const SdPVertex&)>& f) {
    SimplicialMap m;
    if (!src.complex.try_vertex_map(tgt.complex, [&](int v) { return tgt.find(f(src.vertex[v])); }, &m))
        return std::nullopt;
    return m;
}

std::optional<SimplicialMap> naive_vertex_map(int src_n, int tgt_n, const std::function<unsigned(unsigned)>& f) {
    const SdSimplex& src = sd_simplex(src_n);
    const SdSimplex& tgt = sd_simplex(tgt_n);
    SimplicialMap m;
    bool ok = src.complex.try_vertex_map(
        tgt.complex,
        [&](int v) {
            auto it = tgt.vertex_of_mask.find(f(src.masks[v]));
            return it == tgt.vertex_of_mask.end() ? -1 : it->second;
        },
        &m);
    if (!ok) return std::nullopt;
    return m;
}

unsigned j_tilde(int n, int k, unsigned sigma) {
    return extend_by_union(sigma, [&](int i) { return i < k ? interval_mask(i, n) : 1u << i; });
}

unsigned r_tilde(int n, int k, unsigned mu) {
    return extend_by_union(mu, [&](int i) {
        if (i < k) return 1u << i;
        if (i == k) return interval_mask(k, n);
        return 1u << (i - 1);
    });
}

unsigned moss_r_tilde(int /*n*/, int k, unsigned mu) {
    return extend_by_union(mu, [&](int i) {
        if (i <= k) return 1u << i;
        if (i == k + 1) return interval_mask(0, k);
        return 1u << (i - 1);
    });
}

unsigned moss_j_tilde(int /*n*/, int m, unsigned sigma) {
    return extend_by_union(sigma, [&](int i) { return i > m ? interval_mask(0, i) : 1u << i; });
}

unsigned reverse_mask(int n, unsigned sigma) {
    return extend_by_union(sigma, [&](int i) { return 1u << (n - i); });
}

int max_stratum(const PosetPtr& p, const Flag& j, unsigned sigma) {
    (void)p;
    return j[top_index(sigma)];
}

Flag flag_repeat(const Flag& j, int k) { return flag_degeneracy(j, k); }

SimplicialMap sdp_op(SdPCache& c, const Flag& target, const Op& alpha) {
    Flag src_flag;
    for (int v : alpha) src_flag.push_back(target.at(v));
    const SdPSimplex& src = c.simplex(src_flag);
    const SdPSimplex& tgt = c.simplex(target);
    auto m = sdp_vertex_map(src, tgt, [&](const SdPVertex& v) { return SdPVertex{image_mask(v.first, alpha), v.second}; });
    require(m.has_value(), ErrorKind::Internal, "sd_P of an operator is not simplicial");
    return *m;
}

SimplicialMap j_map(SdPCache& c, const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "j index out of range");
    const SdPSimplex& s = c.simplex(j);
    auto m = sdp_vertex_map(s, s, [&](const SdPVertex& v) { return SdPVertex{j_tilde(n, k, v.first), v.second}; });
    require(m.has_value(), ErrorKind::Malformed, "j^k is not simplicial");
    return *m;
}

SimplicialMap r_map(SdPCache& c, const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "r index out of range");
    const SdPSimplex& src = c.simplex(flag_repeat(j, k));
    const SdPSimplex& tgt = c.simplex(j);
    auto m = sdp_vertex_map(src, tgt, [&](const SdPVertex& v) { return SdPVertex{r_tilde(n, k, v.first), v.second}; });
    require(m.has_value(), ErrorKind::Malformed, "r^k is not simplicial");
    return *m;
}

SimplicialMap moss_r(const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "r index out of range");
    auto m = naive_vertex_map(n + 1, n, [&](unsigned mu) { return moss_r_tilde(n, k, mu); });
    require(m.has_value(), ErrorKind::Malformed, "Moss r^k is not simplicial");
    return *m;
}

SimplicialMap lv_p_simplex(SdPCache& c, const Flag& j) {
    const SdPSimplex& s = c.simplex(j);
    const OrderedComplex& tgt = standard_simplex_complex(s.n());
    return s.complex.vertex_map(tgt, [&](int v) {
        const auto& [sigma, q] = s.vertex[v];
        int best = -1;
        for (int i = 0; i <= s.n(); ++i)
            if ((sigma & (1u << i)) && j[i] == q) best = i;
        return best;
    });
}

namespace {

unsigned t_vertex(const PosetPtr& p, const Flag& j, const SdPVertex& v) {
    unsigned out = 0;
    for (int i = 0; i < static_cast<int>(j.size()); ++i)
        if ((v.first & (1u << i)) && p->leq(j[i], v.second)) out |= 1u << i;
    return out;
}

}  // namespace

SimplicialMap t_simplex(SdPCache& c, const Flag& j) {
    const SdPSimplex& s = c.simplex(j);
    const SdSimplex& tgt = sd_simplex(s.n());
    return s.complex.vertex_map(tgt.complex, [&](int v) {
        return tgt.vertex_of_mask.at(t_vertex(c.poset(), j, s.vertex[v]));
    });
}

SimplicialMap factor_f(SdPCache& c, const Flag& j) {
    const int n = static_cast<int>(j.size()) - 1;
    const SdSimplex& src = sd_simplex(n);
    const SdPSimplex& tgt = c.simplex(j);
    return src.complex.vertex_map(tgt.complex, [&](int v) {
        unsigned sigma = src.masks[v];
        return tgt.find(SdPVertex{j_tilde(n, n, sigma), max_stratum(c.poset(), j, sigma)});
    });
}

SimplicialMap square_g(const PosetPtr& p, const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    const Flag jk = flag_repeat(j, k);
    auto m = naive_vertex_map(n + 1, n, [&](unsigned mu) {
        const int top = max_stratum(p, jk, mu);
        unsigned r = r_tilde(n, k, mu), out = 0;
        for (int i = 0; i <= n; ++i)
            if ((r & (1u << i)) && p->leq(j[i], top)) out |= 1u << i;
        return out;
    });
    require(m.has_value(), ErrorKind::Malformed, "g is not simplicial");
    return *m;
}

StratifiedSubdivision sd_p(const StratifiedSet& k, SdPCache& cache) {
    StratifiedSubdivision out;
    const SimplicialSet& x = k.carrier;
    auto surj = [&](const SimplexRef& f) { return surjection_from_word(x[f.nd].dim, f.degen); };
    // Glue objects are sd_P(Delta^{flag of d_i y}) and coincide for equal flags.
    PieceFunctions fns;
    fns.piece = [&](int y) -> const SimplicialSet& { return cache.simplex(k.flags[y]).complex.set(); };
    fns.glue = [&](int y, int i) -> const SimplicialSet& {
        return cache.simplex(flag_face(k.flags[y], i)).complex.set();
    };
    fns.glue_into_self = [&](int y, int i) { return sdp_op(cache, k.flags[y], coface_op(x[y].dim, i)); };
    fns.glue_into_face = [&](int y, int i) {
        const auto& f = x[y].faces[i];
        return sdp_op(cache, k.flags[f.nd], surj(f));
    };
    out.colim = colimit_over_simplices(x, fns);
    std::vector<int> strata(out.colim.set.size(), 0);
    for (int c = 0; c < out.colim.set.size(); ++c) {
        auto [y, t] = out.colim.origin[c];
        const SdPSimplex& piece = cache.simplex(k.flags[y]);
        out.carrier.push_back(y);
        std::vector<SdPVertex> ch;
        for (int v : piece.complex.tuple(t)) ch.push_back(piece.vertex[v]);
        strata[c] = ch[0].second;
        out.chain.push_back(std::move(ch));
    }
    out.set = stratify_by_vertices(k.poset, out.colim.set, strata);
    return out;
}

StratifiedSubdivision sd_p(const StratifiedSet& k) {
    SdPCache cache(k.poset);
    return sd_p(k, cache);
}

SimplicialMap sd_p_map(const StratifiedSet& k, const StratifiedSubdivision& sdk, const StratifiedSet& l,
                       const StratifiedSubdivision& sdl, const SimplicialMap& f, SdPCache& cache) {
    return map_from_colimit(sdk.colim, [&](int obj, int t) {
        const SimplexRef& img = f.image[obj];
        Op theta = surjection_from_word(l.carrier[img.nd].dim, img.degen);
        const SdPSimplex& src = cache.simplex(k.flags[obj]);
        const SdPSimplex& tgt = cache.simplex(l.flags[img.nd]);
        std::vector<int> tuple;
        for (int v : src.complex.tuple(t)) {
            const auto& [sigma, q] = src.vertex[v];
            tuple.push_back(tgt.find(SdPVertex{image_mask(sigma, theta), q}));
        }
        SimplexRef r = tgt.complex.ref(tuple);
        require(r.nd >= 0, ErrorKind::Malformed, "sd_P(f) undefined: f is not stratified");
        return sdl.colim.legs[img.nd](sdl.set.carrier, r);
    });
}

SimplicialMap lv_p(const StratifiedSet& k, const StratifiedSubdivision& sdk, SdPCache& cache) {
    return map_from_colimit(sdk.colim, [&](int obj, int t) {
        const SdPSimplex& piece = cache.simplex(k.flags[obj]);
        Op alpha;
        for (int v : piece.complex.tuple(t)) {
            const auto& [sigma, q] = piece.vertex[v];
            int best = -1;
            for (int i = 0; i <= piece.n(); ++i)
                if ((sigma & (1u << i)) && piece.j[i] == q) best = i;
            alpha.push_back(best);
        }
        return k.carrier.apply(SimplexRef{obj, {}}, alpha);
    });
}

NaiveSubdivision sd_p_naiv(const StratifiedSet& k) {
    NaiveSubdivision out;
    out.sd = sd(k.carrier);
    SimplicialMap lv = last_vertex(k.carrier, out.sd);
    out.set = pull_back(k, out.sd.set, lv);
    return out;
}

SimplicialMap t_map(const StratifiedSet& k, const StratifiedSubdivision& sdk, const NaiveSubdivision& nk,
                    SdPCache& cache) {
    return map_from_colimit(sdk.colim, [&](int obj, int t) {
        const SdPSimplex& piece = cache.simplex(k.flags[obj]);
        const SdSimplex& naive = sd_simplex(piece.n());
        std::vector<int> tuple;
        for (int v : piece.complex.tuple(t))
            tuple.push_back(naive.vertex_of_mask.at(t_vertex(cache.poset(), piece.j, piece.vertex[v])));
        SimplexRef r = naive.complex.ref(tuple);
        require(r.nd >= 0, ErrorKind::Internal, "t does not send a simplex to a simplex");
        return nk.sd.colim.legs[obj](nk.set.carrier, r);
    });
}

std::vector<SdPVertex> t_preimage_witness(const PosetPtr& p, const Flag& j, const std::vector<unsigned>& chain) {
    const int n = static_cast<int>(j.size()) - 1;
    std::vector<int> q;
    for (unsigned s : chain) q.push_back(max_stratum(p, j, s));
    unsigned tilde = 0;
    for (int i = 0; i <= n; ++i) {
        auto first = std::find(q.begin(), q.end(), j[i]);
        if (first == q.end()) continue;
        if (chain[first - q.begin()] & (1u << i)) tilde |= 1u << i;
    }
    std::vector<SdPVertex> out;
    for (size_t l = 0; l < chain.size(); ++l) out.emplace_back(chain[l] | tilde, q[l]);
    return out;
}

}  // namespace stratkit
