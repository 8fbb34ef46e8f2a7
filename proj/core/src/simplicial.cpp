#include "stratkit/simplicial.hpp"

#include <algorithm>
#include <numeric>

namespace stratkit {

Op identity_op(int n) {
    Op a(n + 1);
    std::iota(a.begin(), a.end(), 0);
    return a;
}

Op coface_op(int n, int i) {
    require(i >= 0 && i <= n && n >= 1, ErrorKind::OutOfRange, "coface index out of range");
    Op a;
    for (int v = 0; v <= n; ++v)
        if (v != i) a.push_back(v);
    return a;
}

Op codegeneracy_op(int n, int j) {
    require(j >= 0 && j <= n, ErrorKind::OutOfRange, "codegeneracy index out of range");
    Op a;
    for (int v = 0; v <= n + 1; ++v) a.push_back(v <= j ? v : v - 1);
    return a;
}

Op compose_ops(const Op& outer, const Op& inner) {
    Op a(inner.size());
    for (size_t p = 0; p < inner.size(); ++p) a[p] = outer.at(inner[p]);
    return a;
}

bool is_monotone(const Op& a) {
    for (size_t p = 1; p < a.size(); ++p)
        if (a[p] < a[p - 1]) return false;
    return true;
}

Op surjection_from_word(int k, const std::vector<int>& word) {
    const int n = k + static_cast<int>(word.size());
    Op theta(n + 1, 0);
    for (int p = 0; p < n; ++p) {
        bool repeat = std::find(word.begin(), word.end(), p) != word.end();
        theta[p + 1] = theta[p] + (repeat ? 0 : 1);
    }
    require(theta.back() == k, ErrorKind::Malformed, "degeneracy word out of range");
    return theta;
}

std::vector<int> word_from_surjection(const Op& theta) {
    std::vector<int> word;
    for (int p = static_cast<int>(theta.size()) - 2; p >= 0; --p)
        if (theta[p] == theta[p + 1]) word.push_back(p);
    return word;
}

std::vector<int> normalize_word(std::vector<int> word) {
    // s_i s_j = s_{j+1} s_i for i <= j; bubble larger indices to the left.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < word.size(); ++p) {
            int i = word[p], j = word[p + 1];
            if (i <= j) {
                word[p] = j + 1;
                word[p + 1] = i;
                changed = true;
            }
        }
    }
    return word;
}

int SimplicialSet::add(int dim, std::vector<SimplexRef> faces, std::string name) {
    require(dim >= 0, ErrorKind::Malformed, "negative dimension");
    require(static_cast<int>(faces.size()) == (dim == 0 ? 0 : dim + 1), ErrorKind::Malformed,
            "wrong number of faces");
    for (const auto& f : faces) {
        require(f.nd >= 0 && f.nd < size(), ErrorKind::Malformed, "face refers to unknown simplex");
        require(ref_dim(f) == dim - 1, ErrorKind::Malformed, "face has wrong dimension");
        require(!f.degenerate() || simplices_[f.nd].dim < dim - 1, ErrorKind::Malformed,
                "degenerate face word inconsistent");
    }
    simplices_.push_back(NdSimplex{dim, std::move(faces), std::move(name)});
    return size() - 1;
}

int SimplicialSet::dim() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, s.dim);
    return d;
}

std::vector<int> SimplicialSet::counts() const {
    std::vector<int> c(dim() + 1, 0);
    for (const auto& s : simplices_) ++c[s.dim];
    return c;
}

std::vector<int> SimplicialSet::of_dim(int n) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (simplices_[i].dim == n) out.push_back(i);
    return out;
}

int SimplicialSet::ref_dim(const SimplexRef& x) const {
    return simplices_.at(x.nd).dim + static_cast<int>(x.degen.size());
}

namespace {

// Face of the non-degenerate simplex `id` spanned by the strictly increasing
// vertex subset `sub`.
SimplexRef nd_face(const SimplicialSet& s, int id, const std::vector<int>& sub) {
    const int k = s[id].dim;
    if (static_cast<int>(sub.size()) == k + 1) return SimplexRef{id, {}};
    int missing = 0;
    while (missing < static_cast<int>(sub.size()) && sub[missing] == missing) ++missing;
    Op inc;
    for (int v : sub) inc.push_back(v > missing ? v - 1 : v);
    return s.apply(s[id].faces[missing], inc);
}

}  // namespace

SimplexRef SimplicialSet::apply(const SimplexRef& x, const Op& alpha) const {
    const int k = simplices_.at(x.nd).dim;
    const int n = k + static_cast<int>(x.degen.size());
    require(is_monotone(alpha), ErrorKind::Malformed, "operator is not monotone");
    for (int v : alpha) require(v >= 0 && v <= n, ErrorKind::OutOfRange, "operator out of range");
    Op theta = surjection_from_word(k, x.degen);
    Op gamma = compose_ops(theta, alpha);
    std::vector<int> sub = gamma;
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    Op theta2(gamma.size());
    for (size_t p = 0; p < gamma.size(); ++p)
        theta2[p] = static_cast<int>(std::lower_bound(sub.begin(), sub.end(), gamma[p]) - sub.begin());
    SimplexRef z = nd_face(*this, x.nd, sub);
    Op theta3 = surjection_from_word(simplices_[z.nd].dim, z.degen);
    return SimplexRef{z.nd, word_from_surjection(compose_ops(theta3, theta2))};
}

SimplexRef SimplicialSet::face(const SimplexRef& x, int i) const {
    return apply(x, coface_op(ref_dim(x), i));
}

SimplexRef SimplicialSet::degeneracy(const SimplexRef& x, int j) const {
    return apply(x, codegeneracy_op(ref_dim(x), j));
}

int SimplicialSet::vertex(const SimplexRef& x, int v) const {
    require(v >= 0 && v <= ref_dim(x), ErrorKind::OutOfRange, "vertex index out of range");
    return apply(x, Op{v}).nd;
}

std::vector<int> SimplicialSet::vertices(const SimplexRef& x) const {
    std::vector<int> out;
    for (int v = 0; v <= ref_dim(x); ++v) out.push_back(vertex(x, v));
    return out;
}

SimplexRef SimplicialSet::normalize(int nd, const std::vector<std::pair<char, int>>& word) const {
    require(nd >= 0 && nd < size(), ErrorKind::Malformed, "unknown simplex");
    SimplexRef x{nd, {}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int n = ref_dim(x);
        if (it->first == 'd') {
            require(it->second >= 0 && it->second <= n && n > 0, ErrorKind::OutOfRange,
                    "face index out of range");
            x = face(x, it->second);
        } else {
            require(it->first == 's', ErrorKind::Malformed, "operator must be 'd' or 's'");
            require(it->second >= 0 && it->second <= n, ErrorKind::OutOfRange,
                    "degeneracy index out of range");
            x = degeneracy(x, it->second);
        }
    }
    return x;
}

std::vector<SimplexRef> SimplicialSet::all_simplices(int n) const {
    std::vector<SimplexRef> out;
    for (int id = 0; id < size(); ++id) {
        const int k = simplices_[id].dim;
        if (k > n) continue;
        const int r = n - k;
        // strictly decreasing words of length r over {0..n-1}
        std::vector<int> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + r, 1);
        std::vector<std::vector<int>> words;
        do {
            std::vector<int> w;
            for (int p = n - 1; p >= 0; --p)
                if (pick[p]) w.push_back(p);
            words.push_back(std::move(w));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::sort(words.begin(), words.end());
        for (auto& w : words) out.push_back(SimplexRef{id, std::move(w)});
    }
    return out;
}

void SimplicialSet::validate() const {
    for (int id = 0; id < size(); ++id) {
        const auto& s = simplices_[id];
        if (s.dim < 2) continue;
        for (int j = 1; j <= s.dim; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef lhs = face(s.faces[j], i);
                SimplexRef rhs = face(s.faces[i], j - 1);
                require(lhs == rhs, ErrorKind::Malformed,
                        "simplicial identity d_i d_j = d_{j-1} d_i fails on simplex " +
                            std::to_string(id));
            }
    }
}

int SimplicialSet::euler_characteristic() const {
    int chi = 0;
    for (const auto& s : simplices_) chi += (s.dim % 2 == 0) ? 1 : -1;
    return chi;
}

SimplexRef SimplicialMap::operator()(const SimplicialSet& target, const SimplexRef& x) const {
    const SimplexRef& y = image.at(x.nd);
    if (x.degen.empty()) return y;
    const int k = target.ref_dim(y);
    return target.apply(y, surjection_from_word(k, x.degen));
}

SimplicialMap identity_map(const SimplicialSet& x) {
    SimplicialMap f;
    for (int i = 0; i < x.size(); ++i) f.image.push_back(SimplexRef{i, {}});
    return f;
}

SimplicialMap compose(const SimplicialSet& target, const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap h;
    h.image.reserve(f.image.size());
    for (const auto& y : f.image) h.image.push_back(g(target, y));
    return h;
}

bool is_valid_map(const SimplicialSet& src, const SimplicialSet& tgt, const SimplicialMap& f) {
    if (static_cast<int>(f.image.size()) != src.size()) return false;
    for (int id = 0; id < src.size(); ++id) {
        const auto& y = f.image[id];
        if (y.nd < 0 || y.nd >= tgt.size()) return false;
        if (tgt.ref_dim(y) != src[id].dim) return false;
    }
    for (int id = 0; id < src.size(); ++id) {
        const auto& s = src[id];
        if (s.dim == 0) continue;
        for (int i = 0; i <= s.dim; ++i)
            if (f(tgt, s.faces[i]) != tgt.face(f.image[id], i)) return false;
    }
    return true;
}

bool is_injective_map(const SimplicialSet& src, const SimplicialMap& f) {
    std::vector<SimplexRef> seen;
    for (int id = 0; id < src.size(); ++id) {
        if (f.image[id].degenerate()) return false;
        seen.push_back(f.image[id]);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::vector<char> face_closure(const SimplicialSet& x, std::vector<char> keep) {
    for (int id = x.size() - 1; id >= 0; --id) {
        if (!keep[id]) continue;
        for (const auto& f : x[id].faces) keep[f.nd] = 1;
    }
    // Faces always have smaller ids than their cofaces only if built in order;
    // iterate to a fixed point to be safe.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id = 0; id < x.size(); ++id)
            if (keep[id])
                for (const auto& f : x[id].faces)
                    if (!keep[f.nd]) keep[f.nd] = 1, changed = true;
    }
    return keep;
}

Subcomplex subcomplex(const SimplicialSet& x, const std::vector<char>& keep) {
    Subcomplex out;
    out.new_id.assign(x.size(), -1);
    for (int id = 0; id < x.size(); ++id) {
        if (!keep[id]) continue;
        std::vector<SimplexRef> faces;
        for (const auto& f : x[id].faces) {
            require(out.new_id[f.nd] >= 0, ErrorKind::Malformed, "subcomplex is not closed under faces");
            faces.push_back(SimplexRef{out.new_id[f.nd], f.degen});
        }
        out.new_id[id] = out.set.add(x[id].dim, std::move(faces), x[id].name);
        out.inclusion.image.push_back(SimplexRef{id, {}});
    }
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

}  // namespace

std::vector<int> vertex_components(const SimplicialSet& x, int* count) {
    std::vector<int> parent(x.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int id = 0; id < x.size(); ++id) {
        if (x[id].dim != 1) continue;
        int a = find_root(parent, x[id].faces[0].nd), b = find_root(parent, x[id].faces[1].nd);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> comp(x.size(), -1), label(x.size(), -1);
    int next = 0;
    for (int id = 0; id < x.size(); ++id) {
        if (x[id].dim != 0) continue;
        int r = find_root(parent, id);
        if (label[r] < 0) label[r] = next++;
        comp[id] = label[r];
    }
    if (count) *count = next;
    return comp;
}

int pi0_count(const SimplicialSet& x) {
    int c = 0;
    vertex_components(x, &c);
    return c;
}

Coproduct coproduct(const SimplicialSet& a, const SimplicialSet& b) {
    Coproduct out;
    for (int id = 0; id < a.size(); ++id) {
        out.set.add(a[id].dim, a[id].faces, a[id].name);
        out.in_left.image.push_back(SimplexRef{id, {}});
    }
    const int off = a.size();
    for (int id = 0; id < b.size(); ++id) {
        std::vector<SimplexRef> faces = b[id].faces;
        for (auto& f : faces) f.nd += off;
        out.set.add(b[id].dim, std::move(faces), b[id].name);
        out.in_right.image.push_back(SimplexRef{id + off, {}});
    }
    return out;
}

}  // namespace stratkit
