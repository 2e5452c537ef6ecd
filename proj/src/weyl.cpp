#include "brauer/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t max_size) : rs_(&rs) {
    const auto& pos = rs.positive_roots();
    int n = (int)pos.size();
    int rank = rs.rank();

    std::vector<std::vector<int16_t>> gen_tables(rank);
    for (int g = 0; g < rank; ++g) {
        gen_tables[g].resize(n);
        for (int p = 0; p < n; ++p) {
            Vec w = rs.reflect(pos[p].coords, rs.simple_roots()[g].coords);
            auto [q, sign] = rs.root_of(w);
            gen_tables[g][p] = (int16_t)(sign * (q + 1));
        }
    }

    std::vector<int16_t> id(n);
    for (int p = 0; p < n; ++p) id[p] = (int16_t)(p + 1);
    elements_.push_back({id, {}});
    index_[id] = 0;

    // BFS by right multiplication; generators scanned in increasing order, so
    // each element's recorded word is shortest and lexicographically least.
    for (size_t head = 0; head < elements_.size(); ++head) {
        for (int g = 0; g < rank; ++g) {
            auto img = compose(elements_[head].image, gen_tables[g]);
            if (index_.count(img)) continue;
            if (elements_.size() >= max_size)
                throw std::runtime_error("WeylGroup: max_size exceeded during enumeration");
            auto word = elements_[head].word;
            word.push_back((uint8_t)g);
            index_[img] = (int)elements_.size();
            elements_.push_back({std::move(img), std::move(word)});
        }
    }

    gen_index_.resize(rank);
    for (int g = 0; g < rank; ++g) gen_index_[g] = index_.at(gen_tables[g]);
}

std::vector<int16_t> WeylGroup::compose(const std::vector<int16_t>& a,
                                        const std::vector<int16_t>& b) const {
    // (a o b)(x) = a(b(x))
    std::vector<int16_t> r(b.size());
    for (size_t p = 0; p < b.size(); ++p) {
        int16_t bq = b[p];
        int q = std::abs(bq) - 1;
        int16_t aq = a[q];
        r[p] = bq > 0 ? aq : (int16_t)-aq;
    }
    return r;
}

int WeylGroup::index_of(const std::vector<int16_t>& image) const {
    auto it = index_.find(image);
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
    auto img = compose(elements_[a].image, elements_[b].image);
    return index_.at(img);
}

int WeylGroup::inverse(int a) const {
    const auto& img = elements_[a].image;
    std::vector<int16_t> inv(img.size());
    for (size_t p = 0; p < img.size(); ++p) {
        int q = std::abs(img[p]) - 1;
        inv[q] = img[p] > 0 ? (int16_t)(p + 1) : (int16_t)-(int16_t)(p + 1);
    }
    return index_.at(inv);
}

int WeylGroup::word_to_element(const std::vector<uint8_t>& w) const {
    int e = identity();
    for (uint8_t g : w) e = multiply(e, generator(g));
    return e;
}

std::string WeylGroup::word_name(int idx) const {
    const auto& w = elements_.at(idx).word;
    if (w.empty()) return "1";
    std::string s;
    for (uint8_t g : w) s += "r" + std::to_string((int)g);
    return s;
}

std::pair<int, int> WeylGroup::act_on_root(int w, int root_idx) const {
    int16_t v = elements_.at(w).image.at(root_idx);
    return {std::abs(v) - 1, v > 0 ? 1 : -1};
}

std::set<int> WeylGroup::act_on_rootset(int w, const std::set<int>& B) const {
    std::set<int> r;
    for (int p : B) r.insert(std::abs(elements_.at(w).image.at(p)) - 1);
    return r;
}

int WeylGroup::reflection(int root_idx) const {
    const auto& pos = rs_->positive_roots();
    std::vector<int16_t> img(pos.size());
    for (size_t p = 0; p < pos.size(); ++p) {
        Vec w = rs_->reflect(pos[p].coords, pos[root_idx].coords);
        auto [q, sign] = rs_->root_of(w);
        img[p] = (int16_t)(sign * (q + 1));
    }
    return index_.at(img);
}

std::vector<int> WeylGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::set<int> seen{identity()};
    std::vector<int> queue{identity()};
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int g : gens) {
            int x = multiply(queue[head], g);
            if (seen.insert(x).second) queue.push_back(x);
        }
    }
    std::vector<int> out(seen.begin(), seen.end());
    return out;
}

std::vector<int> WeylGroup::set_stabilizer(const std::set<int>& B) const {
    std::vector<int> out;
    for (int i = 0; i < (int)elements_.size(); ++i)
        if (act_on_rootset(i, B) == B) out.push_back(i);
    return out;
}

std::vector<int> WeylGroup::left_coset_reps(const std::vector<int>& subgroup) const {
    // Elements are enumerated in BFS order, i.e. sorted by (length, lex word),
    // so scanning in index order picks the canonical representative first.
    std::vector<int> reps;
    std::set<int> covered;
    for (int i = 0; i < (int)elements_.size(); ++i) {
        if (covered.count(i)) continue;
        reps.push_back(i);
        for (int h : subgroup) covered.insert(multiply(i, h));
    }
    return reps;
}

}  // namespace brauer
