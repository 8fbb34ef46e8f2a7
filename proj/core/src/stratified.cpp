#include "stratkit/stratified.hpp"

#include <algorithm>
#include <numeric>

#include "stratkit/constructions.hpp"
#include "stratkit/iso.hpp"
#include "stratkit/ordered_complex.hpp"

namespace stratkit {

Flag StratifiedSet::flag_of(const SimplexRef& x) const {
    const Flag& f = flags.at(x.nd);
    if (x.degen.empty()) return f;
    Op theta = surjection_from_word(static_cast<int>(f.size()) - 1, x.degen);
    Flag out;
    for (int v : theta) out.push_back(f[v]);
    return out;
}

void StratifiedSet::validate() const {
    require(poset != nullptr, ErrorKind::Malformed, "stratified set without poset");
    require(static_cast<int>(flags.size()) == carrier.size(), ErrorKind::Malformed, "one flag per simplex required");
    for (int id = 0; id < carrier.size(); ++id) {
        const auto& s = carrier[id];
        const Flag& f = flags[id];
        require(static_cast<int>(f.size()) == s.dim + 1, ErrorKind::Malformed, "flag length mismatch");
        for (int e : f) require(e >= 0 && e < poset->size(), ErrorKind::Malformed, "flag entry outside poset");
        require(poset->is_flag(f), ErrorKind::Malformed, "flag not weakly increasing");
        for (int i = 0; i < static_cast<int>(s.faces.size()); ++i)
            require(flag_of(s.faces[i]) == flag_face(f, i), ErrorKind::Malformed,
                    "flag incompatible with face " + std::to_string(i));
    }
}

StratifiedSet stratify_by_vertices(PosetPtr p, SimplicialSet carrier, const std::vector<int>& vertex_stratum) {
    StratifiedSet k{std::move(p), std::move(carrier), {}};
    for (int id = 0; id < k.carrier.size(); ++id) {
        Flag f;
        for (int v : k.carrier.vertices(id)) f.push_back(vertex_stratum.at(v));
        k.flags.push_back(std::move(f));
    }
    k.validate();
    return k;
}

StratifiedSet pull_back(const StratifiedSet& base, SimplicialSet carrier, const SimplicialMap& to_base) {
    StratifiedSet k{base.poset, std::move(carrier), {}};
    for (int id = 0; id < k.carrier.size(); ++id) k.flags.push_back(base.flag_of(to_base.image.at(id)));
    return k;
}

StratifiedSet standard_simplex(PosetPtr p, const Flag& j) {
    require(!j.empty() && p->is_flag(j), ErrorKind::Malformed, "not a flag");
    return stratify_by_vertices(p, standard_simplex_complex(static_cast<int>(j.size()) - 1).set(), j);
}

StratifiedSet empty_stratified(PosetPtr p) { return StratifiedSet{std::move(p), {}, {}}; }

StratifiedInclusion stratified_subcomplex(const StratifiedSet& k, const std::vector<char>& keep) {
    Subcomplex sub = subcomplex(k.carrier, keep);
    StratifiedInclusion out{StratifiedSet{k.poset, std::move(sub.set), {}}, std::move(sub.inclusion)};
    for (const auto& img : out.inclusion.image) out.sub.flags.push_back(k.flags[img.nd]);
    return out;
}

namespace {

StratifiedInclusion simplex_part(PosetPtr p, const Flag& j, const std::function<bool(const std::vector<int>&)>& in) {
    require(!j.empty() && p->is_flag(j), ErrorKind::Malformed, "not a flag");
    const int n = static_cast<int>(j.size()) - 1;
    const OrderedComplex& c = standard_simplex_complex(n);
    StratifiedSet full = standard_simplex(p, j);
    std::vector<char> keep(c.set().size());
    for (int id = 0; id < c.set().size(); ++id) keep[id] = in(c.tuple(id));
    return stratified_subcomplex(full, keep);
}

}  // namespace

StratifiedInclusion boundary(PosetPtr p, const Flag& j) {
    const int n = static_cast<int>(j.size()) - 1;
    return simplex_part(p, j, [n](const std::vector<int>& t) { return static_cast<int>(t.size()) <= n; });
}

StratifiedInclusion horn(PosetPtr p, const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "horn index out of range");
    return simplex_part(p, j, [n, k](const std::vector<int>& t) {
        // In the union of d_i for i != k iff some i != k is missing.
        for (int i = 0; i <= n; ++i)
            if (i != k && !std::binary_search(t.begin(), t.end(), i)) return true;
        return false;
    });
}

bool is_admissible(const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "horn index out of range");
    return (k < n && j[k] == j[k + 1]) || (k > 0 && j[k] == j[k - 1]);
}

bool is_admissible_by_degeneracy(const Flag& j, int k) {
    const int n = static_cast<int>(j.size()) - 1;
    require(k >= 0 && k <= n, ErrorKind::OutOfRange, "horn index out of range");
    if (n == 0) return false;
    for (int jj : {k - 1, k}) {
        if (jj < 0 || jj > n - 1) continue;
        Flag shorter = flag_face(j, jj + 1);
        if (flag_degeneracy(shorter, jj) == j) return true;
    }
    return false;
}

StratifiedInclusion stratum(const StratifiedSet& k, int p) {
    std::vector<char> keep(k.size());
    for (int id = 0; id < k.size(); ++id)
        keep[id] = std::all_of(k.flags[id].begin(), k.flags[id].end(), [p](int e) { return e == p; });
    return stratified_subcomplex(k, keep);
}

StratifiedProduct stratified_product(const StratifiedSet& k, const SimplicialSet& s) {
    Product pr = product(k.carrier, s);
    StratifiedProduct out{pull_back(k, pr.set, pr.pr1), pr.pr1, pr.pr2};
    return out;
}

StratifiedSet nerve(PosetPtr p, int dim_bound) {
    const int m = p->size();
    std::vector<int> element_of_rank(m);
    for (int e = 0; e < m; ++e) element_of_rank[p->rank(e)] = e;
    std::vector<std::vector<int>> simplices;
    for (const Flag& f : regular_flags(*p)) {
        if (static_cast<int>(f.size()) > dim_bound + 1) continue;
        std::vector<int> t;
        for (int e : f) t.push_back(p->rank(e));
        simplices.push_back(std::move(t));
    }
    OrderedComplex c(m, simplices);
    return stratify_by_vertices(p, c.set(), element_of_rank);
}

bool is_stratified_map(const StratifiedSet& k, const StratifiedSet& l, const SimplicialMap& f) {
    if (!is_valid_map(k.carrier, l.carrier, f)) return false;
    for (int id = 0; id < k.size(); ++id)
        if (l.flag_of(f.image[id]) != k.flags[id]) return false;
    return true;
}

SimplicialMap stratified_identity(const StratifiedSet& k) { return identity_map(k.carrier); }

std::vector<SimplicialMap> enumerate_stratified_maps(const StratifiedSet& k, const StratifiedSet& l,
                                                     std::uint64_t budget) {
    EnumerateOptions opts;
    opts.budget = budget;
    opts.vertex_ok = [&](int a, int b) { return k.stratum_of_vertex(a) == l.stratum_of_vertex(b); };
    return enumerate_maps(k.carrier, l.carrier, opts);
}

int HomotopyClasses::index_of(const SimplicialMap& f) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) return -1;
    return static_cast<int>(it - maps.begin());
}

HomotopyClasses homotopy_classes(const StratifiedSet& k, const StratifiedSet& l, std::uint64_t budget) {
    HomotopyClasses hc;
    hc.maps = enumerate_stratified_maps(k, l, budget);
    std::sort(hc.maps.begin(), hc.maps.end());
    const int count = static_cast<int>(hc.maps.size());
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    const OrderedComplex interval_complex = standard_simplex_complex(1);
    const SimplicialSet& interval = interval_complex.set();
    Product cyl = product(k.carrier, interval);
    StratifiedSet cyl_strat = pull_back(k, cyl.set, cyl.pr1);
    // The two ends K -> K x Delta^1.
    SimplicialMap end[2];
    for (int e = 0; e < 2; ++e)
        for (int id = 0; id < k.size(); ++id) {
            SimplexRef point = interval.apply(interval.nd_ref(e), Op(k.carrier[id].dim + 1, 0));
            end[e].image.push_back(cyl.pair(k.carrier, interval, k.carrier.nd_ref(id), point));
        }
    for (const auto& h : enumerate_stratified_maps(cyl_strat, l, budget)) {
        int a = hc.index_of(compose(l.carrier, h, end[0]));
        int b = hc.index_of(compose(l.carrier, h, end[1]));
        require(a >= 0 && b >= 0, ErrorKind::Internal, "homotopy end is not a listed map");
        parent[root(a)] = root(b);
    }
    std::vector<int> label(count, -1);
    for (int i = 0; i < count; ++i) {
        int r = root(i);
        if (label[r] < 0) label[r] = hc.num_classes++;
        hc.class_of.push_back(label[r]);
    }
    return hc;
}

std::optional<SimplicialMap> stratified_homotopy_inverse(const StratifiedSet& k, const StratifiedSet& l,
                                                         const SimplicialMap& f, std::uint64_t budget) {
    require(is_stratified_map(k, l, f), ErrorKind::Malformed, "not a stratified map");
    HomotopyClasses kk = homotopy_classes(k, k, budget);
    HomotopyClasses ll = homotopy_classes(l, l, budget);
    const int id_k = kk.class_of.at(kk.index_of(identity_map(k.carrier)));
    const int id_l = ll.class_of.at(ll.index_of(identity_map(l.carrier)));
    for (const auto& g : enumerate_stratified_maps(l, k, budget)) {
        int gf = kk.index_of(compose(k.carrier, g, f));
        int fg = ll.index_of(compose(l.carrier, f, g));
        if (kk.class_of.at(gf) == id_k && ll.class_of.at(fg) == id_l) return g;
    }
    return std::nullopt;
}

bool is_stratified_homotopy_equivalence(const StratifiedSet& k, const StratifiedSet& l, const SimplicialMap& f,
                                        std::uint64_t budget) {
    return stratified_homotopy_inverse(k, l, f, budget).has_value();
}

std::optional<SimplicialMap> find_stratified_isomorphism(const StratifiedSet& a, const StratifiedSet& b,
                                                         std::uint64_t budget) {
    auto encode = [](const StratifiedSet& s) {
        std::vector<std::int64_t> c;
        for (const auto& f : s.flags) {
            std::uint64_t h = 0;
            for (int e : f) h = h * 131 + static_cast<std::uint64_t>(e) + 1;
            c.push_back(static_cast<std::int64_t>(h >> 1));
        }
        return c;
    };
    return find_isomorphism(a.carrier, b.carrier, encode(a), encode(b), budget);
}

}  // namespace stratkit
