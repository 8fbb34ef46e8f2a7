#include "stratkit/vertical.hpp"

#include <algorithm>

#include "stratkit/iso.hpp"

namespace stratkit {

void LabelledSet::validate() const {
    require(poset != nullptr, ErrorKind::Malformed, "labelled set without poset");
    require(static_cast<int>(labels.size()) == carrier.size(), ErrorKind::Malformed, "one label per simplex required");
    for (int id = 0; id < carrier.size(); ++id) {
        require(!labels[id].empty() && poset->is_regular(labels[id]), ErrorKind::Malformed, "label is not a regular flag");
        for (const auto& f : carrier[id].faces)
            require(flag_subflag(labels[id], labels[f.nd]), ErrorKind::Malformed, "labels must grow along faces");
    }
}

Verticalization verticalize(const LabelledSet& s) {
    s.validate();
    const PosetPtr& p = s.poset;
    StratifiedSet np = nerve(p, std::max(p->height() - 1, 0));
    Product prod = product(s.carrier, np.carrier);
    std::vector<char> keep(prod.set.size(), 0);
    for (int id = 0; id < prod.set.size(); ++id) {
        const Flag& label = s.labels[prod.pr1.image[id].nd];
        bool inside = true;
        for (int e : np.flag_of(prod.pr2.image[id]))
            inside = inside && std::find(label.begin(), label.end(), e) != label.end();
        keep[id] = inside;
    }
    Subcomplex sub = subcomplex(prod.set, keep);
    Verticalization v;
    v.set = pull_back(np, sub.set, compose(np.carrier, prod.pr2, sub.inclusion));
    v.embedding = sub.inclusion;
    v.base = compose(s.carrier, prod.pr1, sub.inclusion);
    v.ambient = std::move(prod);
    return v;
}

LabelledSubdivision label_subdivision(const StratifiedSet& k) {
    LabelledSubdivision out;
    out.sd = sd(k.carrier);
    out.labelled.poset = k.poset;
    out.labelled.carrier = out.sd.set;
    for (int c = 0; c < out.sd.set.size(); ++c) {
        const int v0 = out.sd.set.vertices(c).front();
        out.labelled.labels.push_back(underlying_regular(k.flags[out.sd.barycentre_of[v0]]));
    }
    return out;
}

Diagram u_functor(const LabelledSet& s) {
    Diagram d = empty_diagram(s.poset);
    std::vector<Subcomplex> parts;
    for (const auto& i : d.flags) {
        std::vector<char> keep(s.carrier.size());
        for (int id = 0; id < s.carrier.size(); ++id) keep[id] = flag_subflag(i, s.labels[id]);
        parts.push_back(subcomplex(s.carrier, keep));
    }
    for (size_t x = 0; x < d.flags.size(); ++x) d.values[x] = parts[x].set;
    for (auto& [key, m] : d.restriction) {
        auto [sm, bg] = key;
        m.image.clear();
        for (const auto& r : parts[bg].inclusion.image) m.image.push_back(SimplexRef{parts[sm].new_id[r.nd], {}});
    }
    return d;
}

LabelledSet diagram_to_labelled(const Diagram& f) {
    CofibrancyReport rep = is_cofibrant(f);
    if (!rep.cofibrant) fail(ErrorKind::NotCofibrant, "diagram is not cofibrant: " + rep.certificate);
    std::vector<const SimplicialSet*> objects;
    for (const auto& v : f.values) objects.push_back(&v);
    std::vector<ColimitArrow> arrows;
    for (const auto& [key, m] : f.restriction) arrows.push_back(ColimitArrow{key.second, key.first, m});
    Colimit c = colimit(objects, arrows);
    LabelledSet out;
    out.poset = f.poset;
    out.carrier = c.set;
    for (int id = 0; id < c.set.size(); ++id) {
        // Flags whose value contains this simplex; cofibrancy makes the set
        // closed under unions, so it has a largest element.
        std::vector<int> holders;
        for (size_t x = 0; x < f.flags.size(); ++x)
            for (int s = 0; s < f.values[x].size(); ++s)
                if (c.legs[x].image[s] == SimplexRef{id, {}}) {
                    holders.push_back(static_cast<int>(x));
                    break;
                }
        int best = -1;
        for (int h : holders) {
            bool top = std::all_of(holders.begin(), holders.end(),
                                   [&](int o) { return flag_subflag(f.flags[o], f.flags[h]); });
            if (top) best = h;
        }
        if (best < 0) fail(ErrorKind::NotCofibrant, "no largest flag contains a simplex");
        out.labels.push_back(f.flags[best]);
    }
    out.validate();
    return out;
}

bool is_label_preserving(const LabelledSet& a, const LabelledSet& b, const SimplicialMap& f) {
    if (!is_valid_map(a.carrier, b.carrier, f)) return false;
    for (int id = 0; id < a.carrier.size(); ++id)
        if (!flag_subflag(a.labels[id], b.labels[f.image[id].nd])) return false;
    return true;
}

std::optional<SimplicialMap> find_labelled_isomorphism(const LabelledSet& a, const LabelledSet& b,
                                                       std::uint64_t budget) {
    auto encode = [](const LabelledSet& s) {
        std::vector<std::int64_t> c;
        for (const auto& f : s.labels) {
            std::uint64_t h = 0;
            for (int e : f) h = h * 131 + static_cast<std::uint64_t>(e) + 1;
            c.push_back(static_cast<std::int64_t>(h >> 1));
        }
        return c;
    };
    return find_isomorphism(a.carrier, b.carrier, encode(a), encode(b), budget);
}

std::optional<SimplicialMap> vertical_base_map(const Verticalization& a, const LabelledSet& sa,
                                               const Verticalization& b, const LabelledSet& sb,
                                               const SimplicialMap& f) {
    if (!is_stratified_map(a.set, b.set, f)) return std::nullopt;
    // Every nd simplex of the base is the base of some column simplex with
    // non-degenerate base part; read the candidate from there.
    SimplicialMap fbar;
    fbar.image.assign(sa.carrier.size(), SimplexRef{});
    std::vector<char> known(sa.carrier.size(), 0);
    for (int v = 0; v < a.set.size(); ++v) {
        const SimplexRef& base = a.base.image[v];
        if (base.degenerate() || known[base.nd]) continue;
        fbar.image[base.nd] = b.base(sb.carrier, f.image[v]);
        known[base.nd] = 1;
    }
    if (!std::all_of(known.begin(), known.end(), [](char k) { return k; })) return std::nullopt;
    if (!is_valid_map(sa.carrier, sb.carrier, fbar)) return std::nullopt;
    for (int v = 0; v < a.set.size(); ++v)
        if (b.base(sb.carrier, f.image[v]) != fbar(sb.carrier, a.base.image[v])) return std::nullopt;
    return fbar;
}

bool is_vertical_map(const Verticalization& a, const LabelledSet& sa, const Verticalization& b,
                     const LabelledSet& sb, const SimplicialMap& f) {
    return vertical_base_map(a, sa, b, sb, f).has_value();
}

}  // namespace stratkit
