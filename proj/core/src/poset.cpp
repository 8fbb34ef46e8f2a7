#include "stratkit/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace stratkit {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& generating)
    : labels_(std::move(elements)) {
    const int n = size();
    require(n > 0, ErrorKind::Malformed, "poset must have at least one element");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    require(static_cast<int>(seen.size()) == n, ErrorKind::Malformed, "duplicate poset element");

    leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [a, b] : generating) leq_[index_of(a) * n + index_of(b)] = 1;
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(!(leq_[i * n + j] && leq_[j * n + i]), ErrorKind::Malformed,
                    "relation is not antisymmetric on " + labels_[i] + ", " + labels_[j]);

    // Linear extension: sort by number of strict predecessors, then index.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq_[j * n + i]) ++below[i];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    rank_.assign(n, 0);
    for (int r = 0; r < n; ++r) rank_[order[r]] = r;

    std::vector<int> longest(n, 1);
    for (int e : order)
        for (int d = 0; d < n; ++d)
            if (d != e && leq_[d * n + e]) longest[e] = std::max(longest[e], longest[d] + 1);
    height_ = *std::max_element(longest.begin(), longest.end());
}

Poset Poset::chain(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return Poset(labels, rel);
}

Poset Poset::antichain(const std::vector<std::string>& labels) { return Poset(labels, {}); }

int Poset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    require(it != labels_.end(), ErrorKind::Malformed, "unknown poset element '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

bool Poset::is_flag(const Flag& f) const {
    if (f.empty()) return false;
    for (int e : f)
        if (e < 0 || e >= size()) return false;
    for (size_t i = 1; i < f.size(); ++i)
        if (!leq(f[i - 1], f[i])) return false;
    return true;
}

bool Poset::is_regular(const Flag& f) const {
    if (!is_flag(f)) return false;
    for (size_t i = 1; i < f.size(); ++i)
        if (f[i - 1] == f[i]) return false;
    return true;
}

Flag Poset::parse_flag(const std::string& text) const {
    Flag f;
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](char c) { return c == '[' || c == ']' || c == ' '; }),
               body.end());
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(index_of(item));
    require(is_flag(f), ErrorKind::Malformed, "not a flag: " + text);
    return f;
}

std::string Poset::format_flag(const Flag& f) const {
    std::string out = "[";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += labels_.at(f[i]);
    }
    return out + "]";
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (lt(a, c) && lt(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

Flag underlying_regular(const Flag& f) {
    Flag out;
    for (int e : f)
        if (out.empty() || out.back() != e) out.push_back(e);
    return out;
}

namespace {

void extend_chains(const Poset& p, Flag& cur, std::vector<Flag>& out) {
    out.push_back(cur);
    for (int e = 0; e < p.size(); ++e)
        if (p.lt(cur.back(), e)) {
            cur.push_back(e);
            extend_chains(p, cur, out);
            cur.pop_back();
        }
}

void extend_flags(const Poset& p, Flag& cur, int max_len, std::vector<Flag>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int e = 0; e < p.size(); ++e)
        if (p.leq(cur.back(), e)) {
            cur.push_back(e);
            extend_flags(p, cur, max_len, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<Flag> regular_flags(const Poset& p) {
    std::vector<Flag> out;
    for (int e = 0; e < p.size(); ++e) {
        Flag cur{e};
        extend_chains(p, cur, out);
    }
    return out;
}

std::vector<Flag> flags_up_to(const Poset& p, int max_len) {
    std::vector<Flag> out;
    if (max_len < 1) return out;
    for (int e = 0; e < p.size(); ++e) {
        Flag cur{e};
        extend_flags(p, cur, max_len, out);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Flag& a, const Flag& b) { return a.size() < b.size(); });
    return out;
}

bool flag_subflag(const Flag& inner, const Flag& outer) {
    for (int e : inner)
        if (std::find(outer.begin(), outer.end(), e) == outer.end()) return false;
    return true;
}

Flag flag_face(const Flag& f, int i) {
    require(i >= 0 && i < static_cast<int>(f.size()), ErrorKind::OutOfRange, "flag face index");
    Flag out = f;
    out.erase(out.begin() + i);
    return out;
}

Flag flag_degeneracy(const Flag& f, int j) {
    require(j >= 0 && j < static_cast<int>(f.size()), ErrorKind::OutOfRange, "flag degeneracy index");
    Flag out = f;
    out.insert(out.begin() + j, f[j]);
    return out;
}

}  // namespace stratkit
