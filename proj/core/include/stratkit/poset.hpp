#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stratkit/common.hpp"

namespace stratkit {

// A flag is a weakly increasing sequence of element indices; a regular flag
// is strictly increasing. Both are plain index vectors.
using Flag = std::vector<int>;

class Poset {
public:
    // `generating` lists pairs a <= b; the reflexive transitive closure is
    // taken and antisymmetry is checked.
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::string, std::string>>& generating);

    // The chain 0 < 1 < ... < n-1 with labels "0", ..., "n-1".
    static Poset chain(int n);
    static Poset antichain(const std::vector<std::string>& labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[a * size() + b]; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    // Position of an element in a fixed linear extension of the order.
    int rank(int e) const { return rank_[e]; }
    // Number of elements in a longest chain.
    int height() const { return height_; }

    bool is_flag(const Flag& f) const;
    bool is_regular(const Flag& f) const;

    Flag parse_flag(const std::string& comma_separated) const;
    std::string format_flag(const Flag& f) const;

    // Generating pairs of the cover relation, for serialisation.
    std::vector<std::pair<int, int>> covers() const;

    bool operator==(const Poset& other) const {
        return labels_ == other.labels_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<int> rank_;
    int height_ = 0;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr make_poset(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

Flag underlying_regular(const Flag& f);

// All regular flags, lexicographic in element indices.
std::vector<Flag> regular_flags(const Poset& p);

// All (weakly increasing) flags of length 1..max_len, ordered by length then
// lexicographically.
std::vector<Flag> flags_up_to(const Poset& p, int max_len);

// Entry-set inclusion.
bool flag_subflag(const Flag& inner, const Flag& outer);

// Flag with entry i deleted / entry j repeated.
Flag flag_face(const Flag& f, int i);
Flag flag_degeneracy(const Flag& f, int j);

}  // namespace stratkit
