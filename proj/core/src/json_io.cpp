#include "stratkit/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stratkit {

using Json = nlohmann::ordered_json;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::Malformed, std::string("invalid JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorKind::Malformed, std::string("unexpected JSON shape: ") + e.what());
    }
}

// Stable ids: the stored name if names are present and unique, else x<i>.
std::vector<std::string> ids_of(const SimplicialSet& s) {
    std::vector<std::string> ids;
    std::set<std::string> seen;
    bool named = true;
    for (const auto& x : s.simplices())
        if (x.name.empty() || !seen.insert(x.name).second) named = false;
    for (int i = 0; i < s.size(); ++i) ids.push_back(named ? s[i].name : "x" + std::to_string(i));
    return ids;
}

Json ref_json(const std::vector<std::string>& ids, const SimplexRef& r) { return Json::array({ids[r.nd], r.degen}); }

SimplexRef ref_from(const Json& j, const std::map<std::string, int>& index) {
    require(j.is_array() && j.size() == 2, ErrorKind::Malformed, "simplex reference must be [id, word]");
    auto it = index.find(j[0].get<std::string>());
    require(it != index.end(), ErrorKind::Malformed, "unknown simplex id " + j[0].dump());
    return SimplexRef{it->second, normalize_word(j[1].get<std::vector<int>>())};
}

Json sset_json(const SimplicialSet& s) {
    auto ids = ids_of(s);
    Json arr = Json::array();
    for (int i = 0; i < s.size(); ++i) {
        Json faces = Json::array();
        for (const auto& f : s[i].faces) faces.push_back(ref_json(ids, f));
        arr.push_back(Json{{"id", ids[i]}, {"dim", s[i].dim}, {"faces", faces}});
    }
    return Json{{"simplices", arr}};
}

// Simplices may be listed in any order; they are added once all faces are.
struct ParsedSet {
    SimplicialSet set;
    std::map<std::string, int> index;
    std::vector<const Json*> entry;  // by new id
};

ParsedSet sset_parse(const Json& doc) {
    ParsedSet out;
    const Json& arr = doc.at("simplices");
    require(arr.is_array(), ErrorKind::Malformed, "\"simplices\" must be an array");
    std::map<std::string, const Json*> pending;
    for (const auto& x : arr) {
        std::string id = x.at("id").get<std::string>();
        require(!pending.count(id), ErrorKind::Malformed, "duplicate simplex id " + id);
        pending[id] = &x;
    }
    std::vector<std::pair<int, std::string>> order;
    for (const auto& [id, x] : pending) order.push_back({x->at("dim").get<int>(), id});
    // By dimension, keeping file order within a dimension.
    std::map<std::string, size_t> file_pos;
    for (size_t i = 0; i < arr.size(); ++i) file_pos[arr[i].at("id").get<std::string>()] = i;
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : file_pos[a.second] < file_pos[b.second];
    });
    for (const auto& [dim, id] : order) {
        const Json& x = *pending[id];
        require(dim >= 0, ErrorKind::Malformed, "negative dimension");
        std::vector<SimplexRef> faces;
        const Json& fs = x.at("faces");
        require(fs.size() == static_cast<size_t>(dim == 0 ? 0 : dim + 1), ErrorKind::Malformed,
                "simplex " + id + " has the wrong number of faces");
        for (const auto& f : fs) faces.push_back(ref_from(f, out.index));
        int nid = out.set.add(dim, std::move(faces), id);
        out.index[id] = nid;
        out.entry.push_back(&x);
    }
    out.set.validate();
    return out;
}

Flag flag_from(const Json& j, const Poset& p) {
    Flag f;
    for (const auto& e : j) {
        int i = p.index_of(e.get<std::string>());
        require(i >= 0, ErrorKind::Malformed, "unknown poset element " + e.dump());
        f.push_back(i);
    }
    return f;
}

Json flag_json(const Flag& f, const Poset& p) {
    Json a = Json::array();
    for (int e : f) a.push_back(p.label(e));
    return a;
}

Json poset_json(const Poset& p) {
    Json leq = Json::array();
    for (auto [a, b] : p.covers()) leq.push_back(Json::array({p.label(a), p.label(b)}));
    return Json{{"elements", p.labels()}, {"leq", leq}};
}

PosetPtr poset_parse(const Json& doc) {
    std::vector<std::string> el = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> leq;
    for (const auto& pr : doc.at("leq")) {
        require(pr.is_array() && pr.size() == 2, ErrorKind::Malformed, "leq entries must be pairs");
        leq.push_back({pr[0].get<std::string>(), pr[1].get<std::string>()});
    }
    return make_poset(Poset(std::move(el), leq));
}

PosetPtr resolve_poset(const Json& doc, PosetPtr p) {
    if (p) return p;
    require(doc.contains("poset"), ErrorKind::Malformed, "no poset given and none embedded");
    return poset_parse(doc.at("poset"));
}

Json stratified_json(const StratifiedSet& k) {
    Json doc = sset_json(k.carrier);
    for (int i = 0; i < k.size(); ++i) doc["simplices"][i]["flag"] = flag_json(k.flags[i], *k.poset);
    doc["poset"] = poset_json(*k.poset);
    return doc;
}

StratifiedSet stratified_parse(const Json& doc, PosetPtr p) {
    p = resolve_poset(doc, p);
    ParsedSet ps = sset_parse(doc);
    StratifiedSet k{p, std::move(ps.set), {}};
    for (const Json* x : ps.entry) k.flags.push_back(flag_from(x->at("flag"), *p));
    k.validate();
    return k;
}

std::map<std::string, int> id_index(const SimplicialSet& s) {
    std::map<std::string, int> out;
    auto ids = ids_of(s);
    for (int i = 0; i < s.size(); ++i) out[ids[i]] = i;
    return out;
}

Json images_json(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
    auto sid = ids_of(source), tid = ids_of(target);
    Json im = Json::object();
    for (int i = 0; i < source.size(); ++i) im[sid[i]] = ref_json(tid, f.image[i]);
    return im;
}

SimplicialMap images_parse(const Json& im, const SimplicialSet& source, const SimplicialSet& target) {
    auto sidx = id_index(source), tidx = id_index(target);
    SimplicialMap f;
    f.image.resize(source.size());
    std::vector<char> seen(source.size(), 0);
    for (const auto& [key, val] : im.items()) {
        auto it = sidx.find(key);
        require(it != sidx.end(), ErrorKind::Malformed, "map names unknown source simplex " + key);
        f.image[it->second] = ref_from(val, tidx);
        seen[it->second] = 1;
    }
    for (int i = 0; i < source.size(); ++i) require(seen[i], ErrorKind::Malformed, "map misses a source simplex");
    require(is_valid_map(source, target, f), ErrorKind::Malformed, "map is not simplicial");
    return f;
}

std::string flag_key(const Flag& f, const Poset& p) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + p.label(f[i]);
    return s + "]";
}

Flag flag_from_key(std::string key, const Poset& p) {
    require(key.size() >= 2 && key.front() == '[' && key.back() == ']', ErrorKind::Malformed, "bad flag key " + key);
    return p.parse_flag(key.substr(1, key.size() - 2));
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::Malformed, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PosetPtr poset_from_json(const std::string& text) {
    return guarded([&] { return poset_parse(parse(text)); });
}
std::string poset_to_json(const Poset& p) { return poset_json(p).dump(2) + "\n"; }

SimplicialSet sset_from_json(const std::string& text) {
    return guarded([&] { return sset_parse(parse(text)).set; });
}
std::string sset_to_json(const SimplicialSet& s) { return sset_json(s).dump(2) + "\n"; }

StratifiedSet stratified_from_json(const std::string& text, PosetPtr p) {
    return guarded([&] { return stratified_parse(parse(text), p); });
}
std::string stratified_to_json(const StratifiedSet& k, int truncation) {
    Json doc = stratified_json(k);
    if (truncation >= 0) doc["truncation"] = truncation;
    return doc.dump(2) + "\n";
}

LabelledSet labelled_from_json(const std::string& text, PosetPtr p) {
    return guarded([&] {
        Json doc = parse(text);
        p = resolve_poset(doc, p);
        ParsedSet ps = sset_parse(doc);
        LabelledSet s{p, std::move(ps.set), {}};
        for (const Json* x : ps.entry) s.labels.push_back(flag_from(x->at("label"), *p));
        s.validate();
        return s;
    });
}
std::string labelled_to_json(const LabelledSet& s) {
    Json doc = sset_json(s.carrier);
    for (int i = 0; i < s.carrier.size(); ++i) doc["simplices"][i]["label"] = flag_json(s.labels[i], *s.poset);
    doc["poset"] = poset_json(*s.poset);
    return doc.dump(2) + "\n";
}

Diagram diagram_from_json(const std::string& text, PosetPtr p) {
    return guarded([&] {
        Json doc = parse(text);
        p = resolve_poset(doc, p);
        Diagram d = empty_diagram(p);
        for (const auto& [key, val] : doc.at("values").items()) {
            int i = d.index_of(flag_from_key(key, *p));
            require(i >= 0, ErrorKind::Malformed, "diagram value at a non-regular flag " + key);
            d.values[i] = sset_parse(val).set;
        }
        if (doc.contains("truncation")) d.truncation = doc.at("truncation").get<int>();
        std::set<std::pair<int, int>> given;
        if (doc.contains("restrictions"))
            for (const auto& [key, val] : doc.at("restrictions").items()) {
                auto cut = key.find("<=");
                require(cut != std::string::npos, ErrorKind::Malformed, "bad restriction key " + key);
                int small = d.index_of(flag_from_key(key.substr(0, cut), *p));
                int big = d.index_of(flag_from_key(key.substr(cut + 2), *p));
                require(small >= 0 && big >= 0 && d.restriction.count({small, big}), ErrorKind::Malformed,
                        "restriction key is not a strict inclusion of regular flags: " + key);
                const Json& im = val.contains("images") ? val.at("images") : val;
                d.restriction[{small, big}] = images_parse(im, d.values[big], d.values[small]);
                given.insert({small, big});
            }
        for (const auto& [key, m] : d.restriction)
            require(given.count(key) || d.values[key.second].empty(), ErrorKind::Malformed,
                    "missing restriction " + flag_key(d.flags[key.first], *p) + "<=" + flag_key(d.flags[key.second], *p));
        d.validate();
        return d;
    });
}

std::string diagram_to_json(const Diagram& d) {
    const Poset& p = *d.poset;
    Json values = Json::object(), res = Json::object();
    for (size_t i = 0; i < d.flags.size(); ++i) values[flag_key(d.flags[i], p)] = sset_json(d.values[i]);
    for (const auto& [key, m] : d.restriction)
        res[flag_key(d.flags[key.first], p) + "<=" + flag_key(d.flags[key.second], p)] =
            Json{{"images", images_json(d.values[key.second], d.values[key.first], m)}};
    Json doc{{"poset", poset_json(p)}, {"values", values}, {"restrictions", res}};
    if (d.truncation >= 0) doc["truncation"] = d.truncation;
    return doc.dump(2) + "\n";
}

MapDocument map_document_from_json(const std::string& text, PosetPtr p) {
    return guarded([&] {
        Json doc = parse(text);
        p = resolve_poset(doc, p);
        MapDocument out{stratified_parse(doc.at("source"), p), stratified_parse(doc.at("target"), p), {}};
        out.map = images_parse(doc.at("images"), out.source.carrier, out.target.carrier);
        return out;
    });
}

std::string map_document_to_json(const StratifiedSet& source, const StratifiedSet& target, const SimplicialMap& f) {
    Json s = stratified_json(source), t = stratified_json(target);
    s.erase("poset");
    t.erase("poset");
    Json doc{{"poset", poset_json(*source.poset)},
             {"source", s},
             {"target", t},
             {"images", images_json(source.carrier, target.carrier, f)}};
    return doc.dump(2) + "\n";
}

SimplicialMap map_from_json(const std::string& text, const SimplicialSet& source, const SimplicialSet& target) {
    return guarded([&] {
        Json doc = parse(text);
        return images_parse(doc.contains("images") ? doc.at("images") : doc, source, target);
    });
}

std::string map_to_json(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
    return Json{{"images", images_json(source, target, f)}}.dump(2) + "\n";
}

}  // namespace stratkit
