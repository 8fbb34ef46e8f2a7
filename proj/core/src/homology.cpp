#include "stratkit/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace stratkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "overflow in Smith normal form");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "overflow in Smith normal form");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "overflow in Smith normal form");
    return r;
}

std::int64_t abs64(std::int64_t a) {
    require(a != INT64_MIN, ErrorKind::IntegerOverflow, "overflow in Smith normal form");
    return a < 0 ? -a : a;
}

using Dense = std::vector<std::vector<std::int64_t>>;

// Dense Smith normal form on a (small) residual matrix; returns |diagonal|.
std::vector<std::int64_t> dense_smith(Dense a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<std::int64_t> diag;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            std::int64_t best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || abs64(a[i][j]) < best)) {
                        best = abs64(a[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) return diag;
            std::swap(a[t], a[pr]);
            for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                std::int64_t q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
                if (a[i][t] != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                std::int64_t q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            // Pivot must divide the rest of the block.
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < cols; ++j) a[t][j] = checked_add(a[t][j], a[bad][j]);
        }
        diag.push_back(abs64(a[t][t]));
    }
    return diag;
}

std::vector<std::int64_t> to_invariant_factors(std::vector<std::int64_t> d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            std::int64_t g = std::gcd(d[i], d[j]);
            std::int64_t l = checked_mul(d[i] / g, d[j]);
            d[i] = g;
            d[j] = l;
        }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
    // Unit-pivot elimination on a row-sparse copy, then dense SNF on the rest.
    std::vector<std::map<int, std::int64_t>> row(m.rows);
    std::vector<std::set<int>> col_rows(m.cols);
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c])
            if (v != 0) {
                row[r][c] = checked_add(row[r][c], v);
                col_rows[c].insert(r);
            }
    std::vector<char> row_alive(m.rows, 1), col_alive(m.cols, 1);
    std::vector<std::int64_t> diag;

    bool progress = true;
    while (progress) {
        progress = false;
        for (int c = 0; c < m.cols; ++c) {
            if (!col_alive[c] || col_rows[c].empty()) continue;
            int pr = -1;
            size_t best = SIZE_MAX;
            for (int r : col_rows[c]) {
                std::int64_t v = row[r].at(c);
                if ((v == 1 || v == -1) && row[r].size() < best) {
                    best = row[r].size();
                    pr = r;
                }
            }
            if (pr < 0) continue;
            const std::int64_t pv = row[pr].at(c);
            std::vector<int> others(col_rows[c].begin(), col_rows[c].end());
            for (int r : others) {
                if (r == pr) continue;
                std::int64_t factor = checked_mul(row[r].at(c), pv);  // pv = +-1 so pv^-1 = pv
                for (const auto& [cc, vv] : row[pr]) {
                    std::int64_t nv = checked_sub(row[r][cc], checked_mul(factor, vv));
                    if (nv == 0) {
                        row[r].erase(cc);
                        col_rows[cc].erase(r);
                    } else {
                        row[r][cc] = nv;
                        col_rows[cc].insert(r);
                    }
                }
            }
            for (const auto& [cc, vv] : row[pr]) col_rows[cc].erase(pr);
            row[pr].clear();
            row_alive[pr] = 0;
            col_alive[c] = 0;
            col_rows[c].clear();
            diag.push_back(1);
            progress = true;
        }
    }

    std::vector<int> rs, cs;
    for (int r = 0; r < m.rows; ++r)
        if (row_alive[r] && !row[r].empty()) rs.push_back(r);
    for (int c = 0; c < m.cols; ++c)
        if (col_alive[c] && !col_rows[c].empty()) cs.push_back(c);
    if (!rs.empty() && !cs.empty()) {
        std::map<int, int> cidx;
        for (size_t j = 0; j < cs.size(); ++j) cidx[cs[j]] = static_cast<int>(j);
        Dense d(rs.size(), std::vector<std::int64_t>(cs.size(), 0));
        for (size_t i = 0; i < rs.size(); ++i)
            for (const auto& [c, v] : row[rs[i]]) d[i][cidx.at(c)] = v;
        for (auto v : dense_smith(std::move(d))) diag.push_back(v);
    }
    SmithForm out;
    out.invariant_factors = to_invariant_factors(std::move(diag));
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

ChainComplex normalized_chains(const SimplicialSet& x, int top) {
    ChainComplex c;
    std::vector<int> local(x.size(), -1);
    c.rank.assign(top + 1, 0);
    for (int id = 0; id < x.size(); ++id)
        if (x[id].dim <= top) local[id] = c.rank[x[id].dim]++;
    c.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        c.boundary[n].rows = n == 0 ? 0 : c.rank[n - 1];
        c.boundary[n].cols = c.rank[n];
        c.boundary[n].columns.resize(c.rank[n]);
    }
    for (int id = 0; id < x.size(); ++id) {
        const int n = x[id].dim;
        if (n == 0 || n > top) continue;
        std::map<int, std::int64_t> col;
        for (int i = 0; i <= n; ++i) {
            const auto& f = x[id].faces[i];
            if (f.degenerate()) continue;
            col[local[f.nd]] += (i % 2 == 0) ? 1 : -1;
        }
        for (const auto& [r, v] : col)
            if (v != 0) c.boundary[n].columns[local[id]].emplace_back(r, v);
    }
    return c;
}

ChainComplex mapping_cone(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f, int top) {
    // Cone_n = A_{n-1} (+) B_n with d(x, y) = (-d x, f x + d y).
    ChainComplex ca = normalized_chains(a, top), cb = normalized_chains(b, top);
    std::vector<int> local_a(a.size(), -1), local_b(b.size(), -1);
    {
        std::vector<int> ca_count(top + 1, 0), cb_count(top + 1, 0);
        for (int id = 0; id < a.size(); ++id)
            if (a[id].dim <= top) local_a[id] = ca_count[a[id].dim]++;
        for (int id = 0; id < b.size(); ++id)
            if (b[id].dim <= top) local_b[id] = cb_count[b[id].dim]++;
    }
    ChainComplex c;
    c.rank.assign(top + 1, 0);
    for (int n = 0; n <= top; ++n) c.rank[n] = (n > 0 ? ca.rank[n - 1] : 0) + cb.rank[n];
    c.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        auto& m = c.boundary[n];
        m.rows = n == 0 ? 0 : c.rank[n - 1];
        m.cols = c.rank[n];
        m.columns.resize(m.cols);
        if (n == 0) continue;
        const int a_prev = n >= 2 ? ca.rank[n - 2] : 0;  // size of the A-block in degree n-1
        // A_{n-1} columns.
        if (n >= 2)
            for (int j = 0; j < ca.rank[n - 1]; ++j)
                for (const auto& [r, v] : ca.boundary[n - 1].columns[j]) m.columns[j].emplace_back(r, -v);
        // f(x) lands in B_{n-1}, which sits after the A_{n-2} block.
        for (int id = 0; id < a.size(); ++id) {
            if (a[id].dim != n - 1) continue;
            const auto& y = f.image[id];
            if (y.degenerate()) continue;
            m.columns[local_a[id]].emplace_back(a_prev + local_b[y.nd], 1);
        }
        // B_n columns.
        for (int j = 0; j < cb.rank[n]; ++j)
            for (const auto& [r, v] : cb.boundary[n].columns[j])
                m.columns[ca.rank[n - 1] + j].emplace_back(a_prev + r, v);
    }
    return c;
}

HomologyReport homology(const ChainComplex& c, int max_deg) {
    const int top = static_cast<int>(c.rank.size()) - 1;
    require(max_deg + 1 <= top, ErrorKind::Internal, "chain complex too short for requested degree");
    std::vector<SmithForm> snf(top + 1);
    for (int n = 1; n <= max_deg + 1; ++n) snf[n] = smith_normal_form(c.boundary[n]);
    HomologyReport h;
    h.valid_up_to = max_deg;
    for (int n = 0; n <= max_deg; ++n) {
        std::int64_t ker = c.rank[n] - (n >= 1 ? snf[n].rank : 0);
        h.betti.push_back(ker - snf[n + 1].rank);
        std::vector<std::int64_t> tors;
        for (auto d : snf[n + 1].invariant_factors)
            if (d > 1) tors.push_back(d);
        h.torsion.push_back(std::move(tors));
    }
    return h;
}

HomologyReport homology(const SimplicialSet& x, int max_deg) {
    return homology(normalized_chains(x, max_deg + 1), max_deg);
}

bool HomologyReport::is_point() const {
    for (int n = 0; n <= valid_up_to; ++n) {
        if (betti[n] != (n == 0 ? 1 : 0)) return false;
        if (!torsion[n].empty()) return false;
    }
    return true;
}

bool HomologyReport::is_zero() const {
    for (int n = 0; n <= valid_up_to; ++n)
        if (betti[n] != 0 || !torsion[n].empty()) return false;
    return true;
}

std::string HomologyReport::to_string() const {
    std::ostringstream os;
    for (int n = 0; n <= valid_up_to; ++n) {
        if (n) os << " ";
        os << "H" << n << "=Z^" << betti[n];
        for (auto t : torsion[n]) os << "+Z/" << t;
    }
    return os.str();
}

bool induces_homology_iso(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f,
                          int max_deg) {
    HomologyReport cone = homology(mapping_cone(a, b, f, max_deg + 1), max_deg);
    if (!cone.is_zero()) return false;
    HomologyReport ha = homology(a, max_deg), hb = homology(b, max_deg);
    return ha.betti[max_deg] == hb.betti[max_deg] && ha.torsion[max_deg] == hb.torsion[max_deg];
}

}  // namespace stratkit
