#include "g2/finitegroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2/chevalley.hpp"

namespace g2 {

ElementStore::ElementStore(const std::vector<Mat>& gens, std::size_t cap)
    : gens_(gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    const Field& F = gens[0].field();
    Mat id = Mat::identity(F, gens[0].rows());
    elems_.push_back(id);
    index_.emplace(id.encode(), 0);
    parent_.emplace_back(-1, -1);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Mat next = elems_[head] * gens_[gi];
            std::string key = next.encode();
            if (index_.find(key) != index_.end()) continue;
            if (elems_.size() >= cap)
                throw std::runtime_error("group larger than cap");
            index_.emplace(std::move(key), elems_.size());
            elems_.push_back(std::move(next));
            parent_.emplace_back(static_cast<std::int32_t>(head),
                                 static_cast<std::int32_t>(gi));
        }
    }
}

bool ElementStore::contains(const Mat& m) const {
    return index_.find(m.encode()) != index_.end();
}

std::optional<std::size_t> ElementStore::index_of(const Mat& m) const {
    auto it = index_.find(m.encode());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> ElementStore::word_for(std::size_t i) const {
    std::vector<int> w;
    while (parent_[i].first >= 0) {
        w.push_back(parent_[i].second);
        i = static_cast<std::size_t>(parent_[i].first);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::size_t group_order(const std::vector<Mat>& gens, std::size_t cap) {
    return ElementStore(gens, cap).order();
}

ConjugacyResult conjugacy_search(const std::vector<Mat>& h1_gens,
                                 const std::vector<Mat>& h2_gens,
                                 const ElementStore& ambient,
                                 std::size_t subgroup_cap) {
    ElementStore h1(h1_gens, subgroup_cap);
    ElementStore h2(h2_gens, subgroup_cap);
    ConjugacyResult out;
    if (h1.order() != h2.order()) {
        out.certified_none = true;
        return out;
    }
    for (std::size_t i = 0; i < ambient.order(); ++i) {
        const Mat& g = ambient.element(i);
        Mat ginv = g.inverse();
        bool ok = true;
        for (const auto& a : h1_gens)
            if (!h2.contains(g * a * ginv)) {
                ok = false;
                break;
            }
        if (ok) {
            out.found = true;
            out.conjugator = g;
            out.word = ambient.word_for(i);
            return out;
        }
    }
    out.certified_none = true;
    return out;
}

Mat fixed_space(const std::vector<Mat>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    const Field& F = gens[0].field();
    int d = gens[0].rows();
    Mat stacked(F, d * static_cast<int>(gens.size()), d);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Mat diff = gens[k] - Mat::identity(F, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                stacked.at(static_cast<int>(k) * d + i, j) = diff.at(i, j);
    }
    return kernel(stacked);
}

std::vector<Mat> g2_generators(const Field& F) {
    const Rep& rep = Rep::get(F);
    std::vector<Mat> gens;
    for (int i = 1; i <= 6; ++i)
        for (int sgn : {1, -1})
            for (const auto& t : F.nonzero_elements())
                gens.push_back(rep.x(sgn * i, t));
    return gens;
}

}  // namespace g2
