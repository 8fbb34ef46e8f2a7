#include "stratkit/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stratkit {

namespace {

using Signature = std::vector<std::int64_t>;

// Refines colours of several sets simultaneously with a shared dictionary so
// that colours are comparable across sets.
std::vector<std::vector<int>> refine(const std::vector<const SimplicialSet*>& sets,
                                     const std::vector<const std::vector<std::int64_t>*>& colours) {
    std::map<Signature, int> dict;
    std::vector<std::vector<int>> col(sets.size());
    for (size_t s = 0; s < sets.size(); ++s) {
        const auto& x = *sets[s];
        for (int id = 0; id < x.size(); ++id) {
            Signature sig{x[id].dim};
            if (!colours[s]->empty()) sig.push_back(colours[s]->at(id));
            for (const auto& f : x[id].faces) {
                sig.push_back(static_cast<std::int64_t>(f.degen.size()));
                for (int w : f.degen) sig.push_back(w);
            }
            auto [it, _] = dict.emplace(sig, static_cast<int>(dict.size()));
            col[s].push_back(it->second);
        }
    }
    size_t classes = dict.size();
    for (int round = 0; round < 64; ++round) {
        std::map<Signature, int> next_dict;
        std::vector<std::vector<int>> next(sets.size());
        for (size_t s = 0; s < sets.size(); ++s) {
            const auto& x = *sets[s];
            std::vector<std::vector<std::int64_t>> cofaces(x.size());
            for (int id = 0; id < x.size(); ++id)
                for (int i = 0; i < static_cast<int>(x[id].faces.size()); ++i) {
                    const auto& f = x[id].faces[i];
                    cofaces[f.nd].push_back(static_cast<std::int64_t>(col[s][id]) * 1024 + i * 32 +
                                            static_cast<std::int64_t>(f.degen.size()));
                }
            for (int id = 0; id < x.size(); ++id) {
                Signature sig{col[s][id]};
                for (const auto& f : x[id].faces) sig.push_back(col[s][f.nd]);
                auto& c = cofaces[id];
                std::sort(c.begin(), c.end());
                sig.push_back(-1);
                sig.insert(sig.end(), c.begin(), c.end());
                auto [it, _] = next_dict.emplace(sig, static_cast<int>(next_dict.size()));
                next[s].push_back(it->second);
            }
        }
        col = std::move(next);
        if (next_dict.size() == classes) break;
        classes = next_dict.size();
    }
    return col;
}

}  // namespace

std::uint64_t canonical_hash(const SimplicialSet& x, const std::vector<std::int64_t>& colour) {
    // Hash of the sorted multiset of refined colour signatures, made
    // independent of dictionary numbering by re-deriving signatures.
    auto col = refine({&x}, {&colour});
    std::map<int, int> counts;
    for (int c : col[0]) ++counts[c];
    std::vector<std::int64_t> shape;
    for (int id = 0; id < x.size(); ++id) shape.push_back(x[id].dim);
    std::sort(shape.begin(), shape.end());
    std::vector<int> mult;
    for (auto& [c, n] : counts) mult.push_back(n);
    std::sort(mult.begin(), mult.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    for (auto v : shape) mix(static_cast<std::uint64_t>(v));
    for (int m : mult) mix(static_cast<std::uint64_t>(m) + 7919);
    return h;
}

std::optional<SimplicialMap> find_isomorphism(const SimplicialSet& a, const SimplicialSet& b,
                                              const std::vector<std::int64_t>& colour_a,
                                              const std::vector<std::int64_t>& colour_b,
                                              std::uint64_t budget) {
    if (a.size() != b.size() || a.counts() != b.counts()) return std::nullopt;
    if (colour_a.empty() != colour_b.empty()) return std::nullopt;
    auto col = refine({&a, &b}, {&colour_a, &colour_b});
    {
        auto ca = col[0], cb = col[1];
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;
    }
    std::vector<int> order(a.size());
    for (int i = 0; i < a.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int u, int w) { return a[u].dim > a[w].dim; });

    std::vector<int> fwd(a.size(), -1), bwd(b.size(), -1);
    std::uint64_t expansions = 0;

    // Assigns u -> v and propagates to faces; records assignments on trail.
    std::function<bool(int, int, std::vector<int>&)> assign = [&](int u, int v, std::vector<int>& trail) {
        if (fwd[u] >= 0) return fwd[u] == v;
        if (bwd[v] >= 0) return false;
        if (col[0][u] != col[1][v]) return false;
        fwd[u] = v;
        bwd[v] = u;
        trail.push_back(u);
        for (size_t i = 0; i < a[u].faces.size(); ++i) {
            const auto& fa = a[u].faces[i];
            const auto& fb = b[v].faces[i];
            if (fa.degen != fb.degen) return false;
            if (!assign(fa.nd, fb.nd, trail)) return false;
        }
        return true;
    };
    auto undo = [&](std::vector<int>& trail) {
        for (int u : trail) {
            bwd[fwd[u]] = -1;
            fwd[u] = -1;
        }
        trail.clear();
    };

    std::function<bool(size_t)> search = [&](size_t k) -> bool {
        while (k < order.size() && fwd[order[k]] >= 0) ++k;
        if (k == order.size()) return true;
        const int u = order[k];
        for (int v = 0; v < b.size(); ++v) {
            if (bwd[v] >= 0 || col[1][v] != col[0][u]) continue;
            if (++expansions > budget)
                fail(ErrorKind::BudgetExceeded, "isomorphism search exceeded budget");
            std::vector<int> trail;
            if (assign(u, v, trail) && search(k + 1)) return true;
            undo(trail);
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    SimplicialMap f;
    for (int u = 0; u < a.size(); ++u) f.image.push_back(SimplexRef{fwd[u], {}});
    if (!is_valid_map(a, b, f)) return std::nullopt;
    return f;
}

}  // namespace stratkit
