#include "stratkit/ex.hpp"

#include <algorithm>
#include <bit>

namespace stratkit {

int ExSet::index(int n, const Flag& j, const SimplicialMap& x) const {
    if (n < 0 || n >= static_cast<int>(level.size())) return -1;
    const auto& lv = level[n];
    std::pair<Flag, SimplicialMap> key{j, x};
    auto it = std::lower_bound(lv.begin(), lv.end(), key);
    if (it == lv.end() || *it != key) return -1;
    return static_cast<int>(it - lv.begin());
}

SimplexRef ExSet::ref(int n, const Flag& j, const SimplicialMap& x) const {
    const int i = index(n, j, x);
    require(i >= 0, ErrorKind::Internal, "not an element of the truncated Ex");
    return lw.ref[n][i];
}

const std::pair<Flag, SimplicialMap>& ExSet::element(int nd) const {
    auto [n, x] = lw.origin.at(nd);
    return level[n][x];
}

namespace {

using DomainOp = std::function<SimplicialMap(const Flag& target, const Op& alpha)>;

ExSet build_ex(const StratifiedSet& k, int truncation, bool naive,
               const std::function<StratifiedSet(const Flag&)>& domain, const DomainOp& op_map,
               std::uint64_t budget) {
    require(truncation >= 0, ErrorKind::OutOfRange, "negative truncation");
    ExSet out;
    out.naive = naive;
    out.truncation = truncation;
    auto flags = flags_up_to(*k.poset, truncation + 1);
    out.level.resize(truncation + 1);
    for (const Flag& j : flags) {
        const int n = static_cast<int>(j.size()) - 1;
        for (auto& x : enumerate_stratified_maps(domain(j), k, budget)) out.level[n].emplace_back(j, std::move(x));
    }
    for (auto& lv : out.level) std::sort(lv.begin(), lv.end());

    LevelData data;
    for (const auto& lv : out.level) data.count.push_back(static_cast<int>(lv.size()));
    auto precompose = [&](int n, int x, const Op& alpha, int target_level) {
        const auto& [j, map] = out.level[n][x];
        Flag jj;
        for (int v : alpha) jj.push_back(j[v]);
        int r = out.index(target_level, jj, compose(k.carrier, map, op_map(j, alpha)));
        require(r >= 0, ErrorKind::Internal, "Ex operator left the level sets");
        return r;
    };
    data.face = [&](int n, int x, int i) { return precompose(n, x, coface_op(n, i), n - 1); };
    data.degeneracy = [&](int n, int x, int j) { return precompose(n, x, codegeneracy_op(n, j), n + 1); };
    out.lw = from_levels(data);
    out.set.poset = k.poset;
    out.set.carrier = out.lw.set;
    for (const auto& [n, x] : out.lw.origin) out.set.flags.push_back(out.level[n][x].first);
    out.set.validate();
    return out;
}

}  // namespace

ExSet ex_p(const StratifiedSet& k, int truncation, SdPCache& cache, std::uint64_t budget) {
    return build_ex(
        k, truncation, false, [&](const Flag& j) { return cache.simplex(j).strat; },
        [&](const Flag& j, const Op& alpha) { return sdp_op(cache, j, alpha); }, budget);
}

ExSet ex_p_naiv(const StratifiedSet& k, int truncation, std::uint64_t budget) {
    return build_ex(
        k, truncation, true, [&](const Flag& j) { return naive_simplex(k.poset, j); },
        [&](const Flag& j, const Op& alpha) {
            const int n = static_cast<int>(j.size()) - 1;
            auto m = naive_vertex_map(static_cast<int>(alpha.size()) - 1, n,
                                      [&](unsigned mask) { return image_mask(mask, alpha); });
            require(m.has_value(), ErrorKind::Internal, "sd of an operator is not simplicial");
            return *m;
        },
        budget);
}

StratifiedSet ex_p_iterated(const StratifiedSet& k, int depth, int truncation, std::uint64_t budget) {
    StratifiedSet cur = k;
    for (int d = 0; d < depth; ++d) {
        SdPCache cache(k.poset);
        cur = ex_p(cur, truncation, cache, budget).set;
    }
    return cur;
}

SimplicialMap characteristic_map(const SimplicialSet& k, int nd) {
    const OrderedComplex& s = standard_simplex_complex(k[nd].dim);
    SimplicialMap m;
    for (int id = 0; id < s.set().size(); ++id) m.image.push_back(k.apply(k.nd_ref(nd), s.tuple(id)));
    return m;
}

SimplicialMap iota(const StratifiedSet& k, const ExSet& ex, SdPCache& cache) {
    SimplicialMap out;
    for (int nd = 0; nd < k.size(); ++nd) {
        const int n = k.carrier[nd].dim;
        require(n <= ex.truncation, ErrorKind::OutOfRange, "simplex above the Ex truncation");
        SimplicialMap x = compose(k.carrier, characteristic_map(k.carrier, nd), lv_p_simplex(cache, k.flags[nd]));
        out.image.push_back(ex.ref(n, k.flags[nd], x));
    }
    return out;
}

SimplicialMap iota_naiv(const StratifiedSet& k, const ExSet& ex) {
    SimplicialMap out;
    for (int nd = 0; nd < k.size(); ++nd) {
        const int n = k.carrier[nd].dim;
        require(n <= ex.truncation, ErrorKind::OutOfRange, "simplex above the Ex truncation");
        const SdSimplex& s = sd_simplex(n);
        SimplicialMap lv = s.complex.vertex_map(standard_simplex_complex(n),
                                                [&](int v) { return 31 - std::countl_zero(s.masks[v]); });
        SimplicialMap x = compose(k.carrier, characteristic_map(k.carrier, nd), lv);
        out.image.push_back(ex.ref(n, k.flags[nd], x));
    }
    return out;
}

SimplicialMap naive_to_ex(const StratifiedSet& k, const ExSet& naive, const ExSet& ex, SdPCache& cache) {
    SimplicialMap out;
    for (const auto& [n, x] : naive.lw.origin) {
        const auto& [j, map] = naive.level[n][x];
        out.image.push_back(ex.ref(n, j, compose(k.carrier, map, t_simplex(cache, j))));
    }
    return out;
}

StratifiedInclusion skeleton(const StratifiedSet& k, int d) {
    std::vector<char> keep(k.size());
    for (int id = 0; id < k.size(); ++id) keep[id] = k.carrier[id].dim <= d;
    return stratified_subcomplex(k, keep);
}

}  // namespace stratkit
