#include "stratkit/identities.hpp"

#include <bit>
#include <map>
#include <tuple>
#include <set>
#include <sstream>

namespace stratkit {

int IdentityReport::failures() const {
    int n = 0;
    for (const auto& i : instances) n += !i.pass;
    return n;
}

std::string IdentityReport::to_tsv(const Poset& p) const {
    std::ostringstream os;
    os << "equation\tflag\tindices\tresult\tdetail\n";
    for (const auto& i : instances) {
        os << i.equation << '\t' << p.format_flag(i.flag) << '\t';
        for (size_t x = 0; x < i.indices.size(); ++x) os << (x ? "," : "") << i.indices[x];
        os << '\t' << (i.pass ? "PASS" : "FAIL") << '\t' << i.detail << '\n';
    }
    return os.str();
}

namespace {

// A map between stratified subdivisions of simplices, tagged with the
// flags of its domain and codomain so composites are checked to be defined.
struct FlagMap {
    Flag src, tgt;
    SimplicialMap map;
};

class Algebra {
public:
    explicit Algebra(SdPCache& c) : c_(c) {}

    FlagMap j(const Flag& f, int k) {
        return memo('j', f, k, [&] { return FlagMap{f, f, j_map(c_, f, k)}; });
    }
    FlagMap r(const Flag& f, int k) {
        return memo('r', f, k, [&] { return FlagMap{flag_repeat(f, k), f, r_map(c_, f, k)}; });
    }
    FlagMap d(const Flag& f, int i) {
        return memo('d', f, i, [&] {
            const int n = static_cast<int>(f.size()) - 1;
            return FlagMap{flag_face(f, i), f, sdp_op(c_, f, coface_op(n, i))};
        });
    }
    FlagMap s(const Flag& f, int k) {
        return memo('s', f, k, [&] {
            const int n = static_cast<int>(f.size()) - 1;
            return FlagMap{flag_repeat(f, k), f, sdp_op(c_, f, codegeneracy_op(n, k))};
        });
    }
    FlagMap id(const Flag& f) { return {f, f, identity_map(c_.simplex(f).complex.set())}; }

    // a o b
    FlagMap then(const FlagMap& a, const FlagMap& b) {
        require(b.tgt == a.src, ErrorKind::Internal, "composite of incompatible maps");
        return {b.src, a.tgt, compose(c_.simplex(a.tgt).complex.set(), a.map, b.map)};
    }
    FlagMap chain(std::initializer_list<FlagMap> ms) {
        std::vector<FlagMap> v(ms);
        FlagMap acc = v.back();
        for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) acc = then(v[i], acc);
        return acc;
    }

private:
    // The same few maps recur across many instances.
    const FlagMap& memo(char kind, const Flag& f, int index, const std::function<FlagMap()>& build) {
        auto key = std::make_tuple(kind, f, index);
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(key, build()).first;
        return it->second;
    }

    SdPCache& c_;
    std::map<std::tuple<char, Flag, int>, FlagMap> memo_;
};

void record(IdentityReport& rep, const char* eq, const Flag& f, std::vector<int> idx,
            const std::function<std::pair<FlagMap, FlagMap>()>& sides) {
    IdentityInstance inst{eq, f, std::move(idx), false, {}};
    try {
        auto [l, r] = sides();
        if (l.src != r.src) inst.detail = "domains differ";
        else if (l.map != r.map) inst.detail = "maps differ";
        else inst.pass = true;
    } catch (const Error& e) {
        inst.detail = e.what();
    }
    rep.instances.push_back(std::move(inst));
}

}  // namespace

IdentityReport verify_identities(const PosetPtr& p, int max_len, SdPCache& cache) {
    IdentityReport rep;
    Algebra a(cache);
    for (const Flag& f : flags_up_to(*p, max_len)) {
        const int n = static_cast<int>(f.size()) - 1;
        for (int k = 0; k <= n; ++k)
            record(rep, "r-splits-face", f, {k}, [&] {
                return std::pair{a.then(a.r(f, k), a.d(flag_repeat(f, k), k)), a.id(f)};
            });
        for (int k = 0; k <= n; ++k)
            for (int i = k + 1; i <= n; ++i)
                record(rep, "j-fixes-jrd", f, {k, i}, [&] {
                    const Flag fk = flag_repeat(f, k);
                    FlagMap rhs = a.chain({a.j(f, k), a.r(f, k), a.d(fk, i)});
                    return std::pair{a.then(rhs, a.j(flag_face(fk, i), k + 1)), rhs};
                });
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i < k; ++i)
                record(rep, "r-commutes-low-face", f, {k, i}, [&] {
                    return std::pair{a.then(a.r(f, k), a.d(flag_repeat(f, k), i)),
                                     a.then(a.d(f, i), a.r(flag_face(f, i), k - 1))};
                });
        for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= k; ++h)
                // Checked with j^h on both sides; the variant with j^{h+1} on the
                // left only holds at h = k (see the unit tests).
                record(rep, "r-commutes-j", f, {k, h}, [&] {
                    return std::pair{a.then(a.r(f, k), a.j(flag_repeat(f, k), h)), a.then(a.j(f, h), a.r(f, k))};
                });
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i <= n; ++i)
                record(rep, "j-fixes-jd", f, {k, i}, [&] {
                    FlagMap rhs = a.then(a.j(f, k), a.d(f, i));
                    return std::pair{a.then(rhs, a.j(flag_face(f, i), k - 1)), rhs};
                });
        for (int h = 2; h <= n; ++h)
            for (int k = 1; k < h; ++k)
                record(rep, "jr-equals-js", f, {h, k}, [&] {
                    return std::pair{a.then(a.j(f, h), a.r(f, k)), a.then(a.j(f, h), a.s(f, k))};
                });
        for (int k = 0; k <= n; ++k)
            record(rep, "jrr-equals-jrs", f, {k}, [&] {
                const Flag fk = flag_repeat(f, k);
                FlagMap jr = a.then(a.j(f, k), a.r(f, k));
                return std::pair{a.then(jr, a.r(fk, k + 1)), a.then(jr, a.s(fk, k))};
            });
        for (int h = 0; h <= n; ++h)
            for (int k = 0; k <= h; ++k)
                record(rep, "s-jr-low", f, {h, k}, [&] {
                    const Flag fh = flag_repeat(f, h), fk = flag_repeat(f, k);
                    return std::pair{a.chain({a.s(f, h), a.j(fh, k), a.r(fh, k)}),
                                     a.chain({a.j(f, k), a.r(f, k), a.s(fk, h + 1)})};
                });
        for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= k; ++h)
                record(rep, "s-jr-high", f, {h, k}, [&] {
                    const Flag fh = flag_repeat(f, h), fk = flag_repeat(f, k);
                    return std::pair{a.chain({a.s(f, h), a.j(fh, k + 1), a.r(fh, k + 1)}),
                                     a.chain({a.j(f, k), a.r(f, k), a.s(fk, h)})};
                });
        for (int k = 0; k <= n; ++k)
            record(rep, "j-fixes-jns", f, {k}, [&] {
                FlagMap rhs = a.then(a.j(f, n), a.s(f, k));
                return std::pair{a.then(rhs, a.j(flag_repeat(f, k), n + 1)), rhs};
            });
    }
    return rep;
}

IdentityReport verify_identities(const PosetPtr& p, int max_len) {
    SdPCache cache(p);
    return verify_identities(p, max_len, cache);
}

namespace {

// Map between two naive simplices or from an sd_P simplex to a naive one,
// compared as plain simplicial maps.
IdentityInstance compare(const char* eq, const Flag& f, std::vector<int> idx, const SimplicialMap& l,
                         const SimplicialMap& r) {
    IdentityInstance inst{eq, f, std::move(idx), l == r, {}};
    if (!inst.pass) inst.detail = "maps differ";
    return inst;
}

}  // namespace

IdentityReport verify_factorizations(const PosetPtr& p, int max_len, SdPCache& cache) {
    IdentityReport rep;
    for (const Flag& f : flags_up_to(*p, max_len)) {
        const int n = static_cast<int>(f.size()) - 1;
        const SdSimplex& naive = sd_simplex(n);
        const OrderedComplex& simplex = standard_simplex_complex(n);
        SimplicialMap t = t_simplex(cache, f);
        SimplicialMap lv = naive.complex.vertex_map(simplex, [&](int v) { return 31 - std::countl_zero(naive.masks[v]); });
        rep.instances.push_back(compare("lv.t=lv_P", f, {}, compose(simplex.set(), lv, t), lv_p_simplex(cache, f)));
        try {
            SimplicialMap fmap = factor_f(cache, f);
            rep.instances.push_back(compare("j^n=f.t", f, {n}, j_map(cache, f, n),
                                            compose(cache.simplex(f).complex.set(), fmap, t)));
            bool stratified = is_stratified_map(naive_simplex(p, f), cache.simplex(f).strat, fmap);
            rep.instances.push_back(IdentityInstance{"f-stratified", f, {n}, stratified, stratified ? "" : "f moves strata"});
        } catch (const Error& e) {
            rep.instances.push_back(IdentityInstance{"j^n=f.t", f, {n}, false, e.what()});
        }
        for (int k = 0; k <= n; ++k) {
            const Flag fk = flag_repeat(f, k);
            try {
                SimplicialMap g = square_g(p, f, k);
                SimplicialMap lhs = compose(naive.complex.set(), t, r_map(cache, f, k));
                SimplicialMap rhs = compose(naive.complex.set(), g, t_simplex(cache, fk));
                rep.instances.push_back(compare("t.r^k=g.t", f, {k}, lhs, rhs));
                bool stratified = is_stratified_map(naive_simplex(p, fk), naive_simplex(p, f), g);
                rep.instances.push_back(IdentityInstance{"g-stratified", f, {k}, stratified, stratified ? "" : "g moves strata"});
            } catch (const Error& e) {
                rep.instances.push_back(IdentityInstance{"t.r^k=g.t", f, {k}, false, e.what()});
            }
            try {
                bool stratified = is_stratified_map(naive_simplex(p, fk), naive_simplex(p, f), moss_r(f, k));
                rep.instances.push_back(
                    IdentityInstance{"moss-r-stratified", f, {k}, stratified, stratified ? "" : "r moves strata"});
            } catch (const Error& e) {
                rep.instances.push_back(IdentityInstance{"moss-r-stratified", f, {k}, false, e.what()});
            }
        }
    }
    return rep;
}

IdentityReport verify_t_surjective(const PosetPtr& p, int max_len, int max_dim, SdPCache& cache) {
    IdentityReport rep;
    for (const Flag& f : flags_up_to(*p, max_len)) {
        const int n = static_cast<int>(f.size()) - 1;
        const SdSimplex& naive = sd_simplex(n);
        const SdPSimplex& sdp = cache.simplex(f);
        SimplicialMap t = t_simplex(cache, f);
        std::set<int> hit;
        for (const auto& r : t.image)
            if (!r.degenerate()) hit.insert(r.nd);
        int missed = 0, witness_failures = 0;
        for (int y = 0; y < naive.complex.set().size(); ++y) {
            if (naive.complex.set()[y].dim > max_dim) continue;
            if (!hit.count(y)) ++missed;
            std::vector<unsigned> chain;
            for (int v : naive.complex.tuple(y)) chain.push_back(naive.masks[v]);
            std::vector<int> tuple;
            for (const auto& v : t_preimage_witness(p, f, chain)) tuple.push_back(sdp.find(v));
            SimplexRef pre = sdp.complex.ref(tuple);
            if (pre.nd < 0 || pre.degenerate() || t.image[pre.nd] != naive.complex.set().nd_ref(y)) ++witness_failures;
        }
        IdentityInstance inst{"t-surjective", f, {max_dim}, missed == 0 && witness_failures == 0, {}};
        if (!inst.pass)
            inst.detail = std::to_string(missed) + " simplices missed, " + std::to_string(witness_failures) + " witnesses failed";
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

}  // namespace stratkit
