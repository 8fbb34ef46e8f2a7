#include "stratkit/ordered_complex.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

namespace stratkit {

OrderedComplex::OrderedComplex(int num_vertices, const std::vector<std::vector<int>>& simplices)
    : num_vertices_(num_vertices) {
    std::set<std::vector<int>> all;
    for (int v = 0; v < num_vertices; ++v) all.insert({v});
    for (const auto& s : simplices) {
        require(!s.empty(), ErrorKind::Malformed, "empty simplex");
        for (size_t i = 1; i < s.size(); ++i)
            require(s[i - 1] < s[i], ErrorKind::Malformed, "simplex tuple not strictly increasing");
        for (int v : s) require(v >= 0 && v < num_vertices, ErrorKind::Malformed, "vertex out of range");
        const int n = static_cast<int>(s.size());
        for (unsigned m = 1; m < (1u << n); ++m) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (m & (1u << i)) sub.push_back(s[i]);
            all.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& t : ordered) {
        std::vector<SimplexRef> faces;
        if (t.size() > 1)
            for (size_t i = 0; i < t.size(); ++i) {
                std::vector<int> f = t;
                f.erase(f.begin() + static_cast<long>(i));
                faces.push_back(SimplexRef{index_.at(f), {}});
            }
        int id = set_.add(static_cast<int>(t.size()) - 1, std::move(faces));
        index_[t] = id;
        tuples_.push_back(t);
    }
}

int OrderedComplex::find(const std::vector<int>& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

SimplexRef OrderedComplex::ref(const std::vector<int>& t) const {
    std::vector<int> uniq;
    Op theta;
    for (size_t p = 0; p < t.size(); ++p) {
        if (p > 0 && t[p] < t[p - 1]) return SimplexRef{-1, {}};
        if (uniq.empty() || uniq.back() != t[p]) uniq.push_back(t[p]);
        theta.push_back(static_cast<int>(uniq.size()) - 1);
    }
    int id = find(uniq);
    if (id < 0) return SimplexRef{-1, {}};
    return SimplexRef{id, word_from_surjection(theta)};
}

bool OrderedComplex::try_vertex_map(const OrderedComplex& target, const std::function<int(int)>& f,
                                    SimplicialMap* out) const {
    SimplicialMap m;
    m.image.reserve(tuples_.size());
    std::vector<int> img;
    for (const auto& t : tuples_) {
        img.clear();
        for (int v : t) img.push_back(f(v));
        SimplexRef r = target.ref(img);
        if (r.nd < 0) return false;
        m.image.push_back(std::move(r));
    }
    if (out) *out = std::move(m);
    return true;
}

SimplicialMap OrderedComplex::vertex_map(const OrderedComplex& target,
                                         const std::function<int(int)>& f) const {
    SimplicialMap m;
    require(try_vertex_map(target, f, &m), ErrorKind::Malformed,
            "vertex function does not extend to a simplicial map");
    return m;
}

OrderedComplex standard_simplex_complex(int n) {
    std::vector<int> top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    return OrderedComplex(n + 1, {top});
}

OrderedComplex grid_complex(int a, int b) {
    // Maximal chains of [a] x [b] are lattice paths.
    std::vector<std::vector<int>> paths;
    std::vector<int> cur{0};
    std::function<void(int, int)> walk = [&](int i, int j) {
        if (i == a && j == b) {
            paths.push_back(cur);
            return;
        }
        if (i < a) {
            cur.push_back((i + 1) * (b + 1) + j);
            walk(i + 1, j);
            cur.pop_back();
        }
        if (j < b) {
            cur.push_back(i * (b + 1) + j + 1);
            walk(i, j + 1);
            cur.pop_back();
        }
    };
    walk(0, 0);
    return OrderedComplex((a + 1) * (b + 1), paths);
}

namespace {

SdSimplex build_sd_simplex(int n) {
    SdSimplex out;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << (n + 1)); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    out.masks = masks;
    for (size_t v = 0; v < masks.size(); ++v) out.vertex_of_mask[masks[v]] = static_cast<int>(v);
    // Maximal chains: permutations of [n].
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    std::vector<std::vector<int>> chains;
    do {
        std::vector<int> chain;
        unsigned m = 0;
        for (int i : perm) {
            m |= 1u << i;
            chain.push_back(out.vertex_of_mask[m]);
        }
        chains.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.complex = OrderedComplex(static_cast<int>(masks.size()), chains);
    return out;
}

}  // namespace

const SdSimplex& sd_simplex(int n) {
    static std::mutex mu;
    static std::map<int, SdSimplex> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_sd_simplex(n)).first;
    return it->second;
}

unsigned image_mask(unsigned mask, const Op& alpha) {
    unsigned out = 0;
    for (size_t v = 0; v < alpha.size(); ++v)
        if (mask & (1u << v)) out |= 1u << alpha[v];
    return out;
}

Op mask_to_op(unsigned mask) {
    Op a;
    for (int v = 0; v < 32; ++v)
        if (mask & (1u << v)) a.push_back(v);
    return a;
}

}  // namespace stratkit
