#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "g2/linalg.hpp"

namespace g2 {

// Exhaustive machinery for desk-scale matrix groups: breadth-first element
// enumeration with predecessor links, exact orders, and subgroup conjugacy
// search by plain exhaustion over the ambient group.

class ElementStore {
public:
    // BFS closure of the generators; throws std::runtime_error when the
    // group exceeds cap.
    ElementStore(const std::vector<Mat>& gens, std::size_t cap);

    std::size_t order() const { return elems_.size(); }
    const Mat& element(std::size_t i) const { return elems_[i]; }
    bool contains(const Mat& m) const;
    std::optional<std::size_t> index_of(const Mat& m) const;

    // word in the generators reaching element i (generator indices)
    std::vector<int> word_for(std::size_t i) const;
    const std::vector<Mat>& generators() const { return gens_; }

private:
    std::vector<Mat> gens_;
    std::vector<Mat> elems_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::int32_t, std::int32_t>> parent_;  // (elem, gen)
};

std::size_t group_order(const std::vector<Mat>& gens, std::size_t cap);

struct ConjugacyResult {
    bool found = false;         // a conjugator exists
    bool certified_none = false;  // the whole ambient group was exhausted
    Mat conjugator;
    std::vector<int> word;      // ambient generator word for the conjugator
};

// Searches g in ambient with g <H1> g^-1 = <H2> as element sets.
ConjugacyResult conjugacy_search(const std::vector<Mat>& h1_gens,
                                 const std::vector<Mat>& h2_gens,
                                 const ElementStore& ambient,
                                 std::size_t subgroup_cap = 4096);

// Basis of the common fixed space of the generators (rows of the result).
Mat fixed_space(const std::vector<Mat>& gens);

// All x_{+-i}(t) generators of G2(q) (t over a field basis scale: every
// nonzero t, which is exhaustive at desk fields).
std::vector<Mat> g2_generators(const Field& F);

}  // namespace g2
