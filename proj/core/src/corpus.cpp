#include "stratkit/corpus.hpp"

#include "stratkit/ordered_complex.hpp"

namespace stratkit {

PosetPtr chain3() { return make_poset(Poset::chain(3)); }

std::vector<CorpusEntry> standard_corpus(const PosetPtr& p) {
    std::vector<CorpusEntry> out;
    out.push_back({"simplex[0]", standard_simplex(p, {0})});
    out.push_back({"simplex[0<1]", standard_simplex(p, {0, 1})});
    out.push_back({"simplex[0<1<2]", standard_simplex(p, {0, 1, 2})});
    out.push_back({"simplex[0<=0<=1]", standard_simplex(p, {0, 0, 1})});
    out.push_back({"boundary[0<1]", boundary(p, {0, 1}).sub});
    out.push_back({"boundary[0<1<2]", boundary(p, {0, 1, 2}).sub});
    out.push_back({"horn1[0<=0<=1]", horn(p, {0, 0, 1}, 1).sub});
    out.push_back({"horn1[0<1<2]", horn(p, {0, 1, 2}, 1).sub});

    // Vertex 0 in the bottom stratum, two hollow triangles through it whose
    // other vertices lie in stratum 1.
    OrderedComplex eight(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    out.push_back({"figure-eight", stratify_by_vertices(p, eight.set(), {0, 1, 1, 1, 1})});

    OrderedComplex circle(3, {{0, 1}, {0, 2}, {1, 2}});
    out.push_back({"cylinder[0<1]xS1", stratified_product(standard_simplex(p, {0, 1}), circle.set()).set});
    return out;
}

std::vector<LabelledEntry> labelled_corpus(const PosetPtr& p) {
    std::vector<LabelledEntry> out;
    for (const auto& e : standard_corpus(p)) out.push_back({"sd " + e.name, label_subdivision(e.set).labelled});

    SimplicialSet point;
    point.add(0, {});
    out.push_back({"point[0<1]", LabelledSet{p, point, {{0, 1}}}});

    OrderedComplex edge(2, {{0, 1}});
    out.push_back({"edge[0<1|1]", LabelledSet{p, edge.set(), {{0, 1}, {0, 1}, {1}}}});

    // A triangle whose faces carry shrinking labels.
    OrderedComplex tri(3, {{0, 1, 2}});
    std::vector<Flag> labels(tri.set().size());
    for (int i = 0; i < tri.set().size(); ++i) {
        const int d = tri.set()[i].dim;
        labels[i] = d == 0 ? Flag{0, 1, 2} : d == 1 ? Flag{1, 2} : Flag{2};
    }
    out.push_back({"triangle[012|12|2]", LabelledSet{p, tri.set(), labels}});
    return out;
}

}  // namespace stratkit
