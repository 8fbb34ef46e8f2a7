#include "stratkit/pairing.hpp"

#include <algorithm>
#include <set>

namespace stratkit {

PairingCheck check_pairing(const StratifiedSet& b, const Pairing& p) {
    PairingCheck out;
    const SimplicialSet& x = b.carrier;
    auto fail_with = [&](std::string why) {
        out.detail = std::move(why);
        return out;
    };
    if (static_cast<int>(p.in_a.size()) != x.size()) return fail_with("membership vector has the wrong size");
    for (int id = 0; id < x.size(); ++id)
        if (p.in_a[id])
            for (const auto& f : x[id].faces)
                if (!p.in_a[f.nd]) return fail_with("A is not a subcomplex");
    std::vector<int> role(x.size(), 0);  // 1 type II, 2 type I, 3 deferred
    for (const auto& [s, t] : p.t) {
        if (s < 0 || s >= x.size() || t < 0 || t >= x.size()) return fail_with("pairing names an unknown simplex");
        if (p.in_a[s] || p.in_a[t]) return fail_with("pairing touches A");
        if (role[s] != 0 || role[t] != 0) return fail_with("pairing is not a bijection onto disjoint sets");
        role[s] = 1;
        role[t] = 2;
    }
    for (int d : p.deferred) {
        if (role[d] != 0 || p.in_a[d]) return fail_with("deferred simplex is also paired");
        if (x[d].dim != p.truncation) return fail_with("deferred simplex below the truncation dimension");
        role[d] = 3;
    }
    if (!p.unpaired.empty()) return fail_with(std::to_string(p.unpaired.size()) + " relative simplices unpaired");
    for (int id = 0; id < x.size(); ++id)
        if (!p.in_a[id] && role[id] == 0) return fail_with("relative simplex outside the partition");
    out.well_formed = true;

    out.proper = true;
    out.admissible = true;
    for (const auto& [s, t] : p.t) {
        int ways = 0, k = -1;
        for (int i = 0; i <= x[t].dim; ++i)
            if (x[t].faces.size() > static_cast<size_t>(i) && x[t].faces[i] == x.nd_ref(s)) ++ways, k = i;
        if (ways != 1) {
            out.proper = false;
            out.admissible = false;
            if (out.detail.empty()) out.detail = "type II simplex is a face of its partner in " + std::to_string(ways) + " ways";
            continue;
        }
        if (!is_admissible(b.flags[t], k)) {
            out.admissible = false;
            if (out.detail.empty()) out.detail = "inadmissible horn at index " + std::to_string(k);
        }
    }

    // sigma < tau when sigma != tau is a type II face of T(tau); regular iff
    // this finite relation has no cycle.
    std::map<int, std::vector<int>> edges;
    for (const auto& [tau, partner] : p.t) {
        std::vector<char> seed(x.size(), 0);
        seed[partner] = 1;
        auto closure = face_closure(x, seed);
        for (int sigma = 0; sigma < x.size(); ++sigma)
            if (closure[sigma] && sigma != tau && role[sigma] == 1) edges[sigma].push_back(tau);
    }
    std::map<int, int> colour;
    bool cyclic = false;
    std::function<void(int)> visit = [&](int v) {
        colour[v] = 1;
        for (int w : edges[v]) {
            if (cyclic) return;
            if (colour[w] == 1) cyclic = true;
            else if (colour[w] == 0) visit(w);
        }
        colour[v] = 2;
    };
    for (const auto& [s, t] : p.t)
        if (!cyclic && colour[s] == 0) visit(s);
    out.regular = !cyclic;
    if (cyclic && out.detail.empty()) out.detail = "ancestral relation has a cycle";
    return out;
}

Pairing build_pairing(const StratifiedSet& b, std::vector<char> in_a, int truncation,
                      const std::function<std::optional<SimplexRef>(int nd)>& partner) {
    const SimplicialSet& x = b.carrier;
    Pairing p;
    p.in_a = std::move(in_a);
    p.truncation = truncation;
    std::vector<int> order(x.size());
    for (int i = 0; i < x.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return x[a].dim < x[c].dim; });
    std::set<int> type_one;
    for (int id : order) {
        if (p.in_a[id] || type_one.count(id)) continue;
        if (truncation >= 0 && x[id].dim >= truncation) {
            p.deferred.push_back(id);
            continue;
        }
        auto t = partner(id);
        if (!t || t->degenerate() || p.in_a[t->nd] || type_one.count(t->nd) || p.t.count(t->nd)) {
            p.unpaired.push_back(id);
            continue;
        }
        p.t[id] = t->nd;
        type_one.insert(t->nd);
    }
    return p;
}

namespace {

bool fixed_by(const StratifiedSet& k, const SimplicialMap& x, const SimplicialMap& j) {
    return compose(k.carrier, x, j) == x;
}

}  // namespace

std::vector<char> j_hat_membership(const StratifiedSet& k, const ExSet& ex, SdPCache& cache) {
    std::vector<char> in(ex.set.size(), 0);
    for (int nd = 0; nd < ex.set.size(); ++nd) {
        const auto& [j, x] = ex.element(nd);
        const int n = static_cast<int>(j.size()) - 1;
        in[nd] = fixed_by(k, x, j_map(cache, j, n));
    }
    return in;
}

ExPairing build_pairing_ex(const StratifiedSet& k, int truncation, SdPCache& cache, std::uint64_t budget) {
    ExPairing out;
    out.ex = ex_p(k, truncation, cache, budget);
    const ExSet& ex = out.ex;
    out.pairing = build_pairing(ex.set, j_hat_membership(k, ex, cache), truncation,
                                [&](int nd) -> std::optional<SimplexRef> {
        const auto& [j, x] = ex.element(nd);
        const int n = static_cast<int>(j.size()) - 1;
        int best = 0;
        for (int kk = 0; kk <= n; ++kk)
            if (fixed_by(k, x, j_map(cache, j, kk))) best = kk;
        SimplicialMap tx = compose(k.carrier, x, r_map(cache, j, best));
        const int idx = ex.index(n + 1, flag_repeat(j, best), tx);
        if (idx < 0) return std::nullopt;
        return ex.lw.ref[n + 1][idx];
    });
    out.check = check_pairing(ex.set, out.pairing);
    return out;
}

ExPairing build_pairing_ex_naiv(const StratifiedSet& k, int truncation, std::uint64_t budget) {
    ExPairing out;
    out.ex = ex_p_naiv(k, truncation, budget);
    const ExSet& ex = out.ex;
    auto moss_j_map = [&](int n, int m) {
        auto jm = naive_vertex_map(n, n, [&](unsigned s) { return moss_j_tilde(n, m, s); });
        require(jm.has_value(), ErrorKind::Internal, "Moss j is not simplicial");
        return *jm;
    };
    std::vector<char> in_a(ex.set.size(), 0);
    for (int nd = 0; nd < ex.set.size(); ++nd) {
        const auto& [j, x] = ex.element(nd);
        in_a[nd] = fixed_by(k, x, moss_j_map(static_cast<int>(j.size()) - 1, 0));
    }
    out.pairing = build_pairing(ex.set, in_a, truncation, [&](int nd) -> std::optional<SimplexRef> {
        const auto& [j, x] = ex.element(nd);
        const int n = static_cast<int>(j.size()) - 1;
        int m = n;
        for (int mm = n; mm >= 0; --mm)
            if (fixed_by(k, x, moss_j_map(n, mm))) m = mm;
        // Partner repeats entry m of J so that x = d_{m+1}(x o r^m).
        SimplicialMap tx = compose(k.carrier, x, moss_r(j, m));
        const int idx = ex.index(n + 1, flag_repeat(j, m), tx);
        if (idx < 0) return std::nullopt;
        return ex.lw.ref[n + 1][idx];
    });
    out.check = check_pairing(ex.set, out.pairing);
    return out;
}

}  // namespace stratkit
