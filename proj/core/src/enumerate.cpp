#include "stratkit/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stratkit {

namespace {

struct Search {
    const SimplicialSet& x;
    const SimplicialSet& y;
    const EnumerateOptions& opts;
    std::vector<int> order;
    std::vector<std::vector<int>> x_vertices;
    // Per dimension: target simplices bucketed by vertex tuple.
    std::vector<std::map<std::vector<int>, std::vector<SimplexRef>>> buckets;
    std::vector<SimplexRef> y_vertices;
    std::vector<SimplexRef> image;
    std::vector<char> assigned;
    std::uint64_t expansions = 0;
    std::vector<SimplicialMap> results;

    Search(const SimplicialSet& xs, const SimplicialSet& ys, const EnumerateOptions& o)
        : x(xs), y(ys), opts(o) {}

    void tick() {
        if (++expansions > opts.budget)
            fail(ErrorKind::BudgetExceeded,
                 "map enumeration exceeded budget of " + std::to_string(opts.budget) + " expansions");
    }

    void prepare() {
        const int top = x.dim();
        x_vertices.resize(x.size());
        for (int id = 0; id < x.size(); ++id) {
            auto vs = x.vertices(id);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            x_vertices[id] = std::move(vs);
        }
        buckets.resize(std::max(top + 1, 0));
        for (int n = 1; n <= top; ++n)
            for (auto& s : y.all_simplices(n)) buckets[n][y.vertices(s)].push_back(s);
        for (int v : y.of_dim(0)) y_vertices.push_back(SimplexRef{v, {}});

        // Vertex order: breadth first through the 1-skeleton, so that
        // simplices become placeable early and prune the search.
        std::vector<std::vector<int>> adj(x.size());
        for (int id = 0; id < x.size(); ++id)
            if (x[id].dim == 1) {
                int a = x[id].faces[1].nd, b = x[id].faces[0].nd;
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        std::vector<char> seen(x.size(), 0), placed(x.size(), 0);
        std::vector<int> vorder;
        for (int v : x.of_dim(0)) {
            if (seen[v]) continue;
            std::deque<int> q{v};
            seen[v] = 1;
            while (!q.empty()) {
                int a = q.front();
                q.pop_front();
                vorder.push_back(a);
                for (int b : adj[a])
                    if (!seen[b]) seen[b] = 1, q.push_back(b);
            }
        }
        std::vector<std::vector<int>> by_max_vertex_pos(x.size());
        std::vector<int> pos(x.size(), -1);
        for (size_t i = 0; i < vorder.size(); ++i) pos[vorder[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> batch(vorder.size());
        for (int id = 0; id < x.size(); ++id) {
            int p = 0;
            for (int v : x_vertices[id]) p = std::max(p, pos[v]);
            batch[p].push_back(id);
        }
        for (auto& b : batch) {
            std::stable_sort(b.begin(), b.end(), [&](int u, int w) { return x[u].dim < x[w].dim; });
            for (int id : b) order.push_back(id);
        }
        image.assign(x.size(), SimplexRef{});
        assigned.assign(x.size(), 0);
    }

    bool consistent(int id, const SimplexRef& cand) {
        const auto& s = x[id];
        if (s.dim == 0) return true;
        for (int i = 0; i <= s.dim; ++i) {
            const auto& f = s.faces[i];
            SimplexRef fi = image[f.nd];
            if (f.degenerate()) fi = y.apply(fi, surjection_from_word(x[f.nd].dim, f.degen));
            if (y.face(cand, i) != fi) return false;
        }
        return true;
    }

    void recurse(size_t k) {
        if (k == order.size()) {
            results.push_back(SimplicialMap{image});
            return;
        }
        const int id = order[k];
        const int n = x[id].dim;
        auto fixed = opts.fixed.find(id);
        auto attempt = [&](const SimplexRef& cand) {
            tick();
            if (!consistent(id, cand)) return;
            image[id] = cand;
            assigned[id] = 1;
            recurse(k + 1);
            assigned[id] = 0;
        };
        if (fixed != opts.fixed.end()) {
            attempt(fixed->second);
            return;
        }
        if (n == 0) {
            for (const auto& c : y_vertices)
                if (!opts.vertex_ok || opts.vertex_ok(id, c.nd)) attempt(c);
            return;
        }
        std::vector<int> tuple;
        for (int v = 0; v <= n; ++v) tuple.push_back(image[x.vertex(SimplexRef{id, {}}, v)].nd);
        auto it = buckets[n].find(tuple);
        if (it == buckets[n].end()) {
            tick();
            return;
        }
        for (const auto& c : it->second) attempt(c);
    }
};

}  // namespace

std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& x, const SimplicialSet& y,
                                          const EnumerateOptions& opts) {
    if (x.empty()) return {SimplicialMap{}};
    if (y.empty()) return {};
    Search s(x, y, opts);
    s.prepare();
    s.recurse(0);
    std::sort(s.results.begin(), s.results.end());
    return std::move(s.results);
}

LevelwiseSet from_levels(const LevelData& data) {
    LevelwiseSet out;
    const int top = static_cast<int>(data.count.size()) - 1;
    out.ref.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        out.ref[n].resize(data.count[n]);
        for (int xi = 0; xi < data.count[n]; ++xi) {
            bool degenerate = false;
            for (int j = 0; j < n && !degenerate; ++j) {
                int yj = data.face(n, xi, j);
                if (data.degeneracy(n - 1, yj, j) == xi) {
                    out.ref[n][xi] = out.set.degeneracy(out.ref[n - 1][yj], j);
                    degenerate = true;
                }
            }
            if (degenerate) continue;
            std::vector<SimplexRef> faces;
            if (n > 0)
                for (int i = 0; i <= n; ++i) faces.push_back(out.ref[n - 1][data.face(n, xi, i)]);
            int id = out.set.add(n, std::move(faces));
            out.origin.emplace_back(n, xi);
            out.ref[n][xi] = SimplexRef{id, {}};
        }
    }
    return out;
}

}  // namespace stratkit
