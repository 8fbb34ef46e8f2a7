// Brute-force reference computations shared by the unit tests. They work
// from definitions directly and never call the library's algorithms.
#pragma once

#include <functional>
#include <vector>

namespace oracle {

// All monotone maps [m] -> [n] as value lists.
inline std::vector<std::vector<int>> monotone_maps(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == m + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline bool surjective(const std::vector<int>& a, int n) {
    std::vector<char> hit(n + 1, 0);
    for (int v : a) hit[v] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

// Non-degenerate m-simplices of Delta^p x Delta^q: pairs of monotone maps
// that never repeat a pair of values on consecutive vertices.
inline int product_nd_count(int p, int q, int m) {
    int count = 0;
    for (const auto& a : monotone_maps(m, p))
        for (const auto& b : monotone_maps(m, q)) {
            bool nd = true;
            for (int i = 0; i < m; ++i)
                if (a[i] == a[i + 1] && b[i] == b[i + 1]) nd = false;
            count += nd;
        }
    return count;
}

// Rank of an integer matrix over Q by fraction-free elimination, used for
// Betti numbers of small complexes.
inline int rank_q(std::vector<std::vector<long long>> a) {
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a[r][c] != 0) {
                long long f = a[r][c], g = a[rank][c];
                for (int k = 0; k < cols; ++k) a[r][k] = a[r][k] * g - a[rank][k] * f;
            }
        ++rank;
    }
    return rank;
}

// Rational Betti numbers of a simplicial complex given by all of its
// simplices as sorted vertex lists.
inline std::vector<int> betti_q(const std::vector<std::vector<int>>& simplices, int top) {
    std::vector<std::vector<std::vector<int>>> by_dim(top + 2);
    for (const auto& s : simplices)
        if (static_cast<int>(s.size()) - 1 <= top + 1) by_dim[s.size() - 1].push_back(s);
    auto index_in = [](const std::vector<std::vector<int>>& list, const std::vector<int>& s) {
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == s) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> rank(top + 2, 0);  // rank of boundary C_d -> C_{d-1}
    for (int d = 1; d <= top + 1; ++d) {
        std::vector<std::vector<long long>> m(by_dim[d - 1].size(), std::vector<long long>(by_dim[d].size(), 0));
        for (size_t j = 0; j < by_dim[d].size(); ++j)
            for (int i = 0; i <= d; ++i) {
                std::vector<int> f = by_dim[d][j];
                f.erase(f.begin() + i);
                m[index_in(by_dim[d - 1], f)][j] += (i % 2 ? -1 : 1);
            }
        rank[d] = by_dim[d - 1].empty() || by_dim[d].empty() ? 0 : rank_q(m);
    }
    std::vector<int> betti;
    for (int d = 0; d <= top; ++d)
        betti.push_back(static_cast<int>(by_dim[d].size()) - rank[d] - rank[d + 1]);
    return betti;
}

// Downward closure of a list of facets.
inline std::vector<std::vector<int>> closure(const std::vector<std::vector<int>>& facets) {
    std::vector<std::vector<int>> out;
    for (const auto& f : facets)
        for (unsigned m = 1; m < (1u << f.size()); ++m) {
            std::vector<int> s;
            for (size_t i = 0; i < f.size(); ++i)
                if (m & (1u << i)) s.push_back(f[i]);
            bool seen = false;
            for (const auto& t : out) seen = seen || t == s;
            if (!seen) out.push_back(s);
        }
    return out;
}

}  // namespace oracle
