#include "brauer/admissible.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace brauer {

bool mutually_orthogonal(const RootSystem& rs, const std::set<int>& B) {
    for (auto i = B.begin(); i != B.end(); ++i)
        for (auto j = std::next(i); j != B.end(); ++j)
            if (!rs.bilinear(*i, *j).is_zero()) return false;
    return true;
}

namespace {

// Positive representatives of 2*gamma + g1 + g2 + g3 over all roots gamma
// (either sign) with (gamma, g_i) = -1 for i = 1,2,3.
std::vector<int> forced_roots(const RootSystem& rs, int g1, int g2, int g3) {
    std::vector<int> out;
    const auto& pos = rs.positive_roots();
    Vec sum = pos[g1].coords + pos[g2].coords + pos[g3].coords;
    const Rational minus1(-1);
    for (int p = 0; p < (int)pos.size(); ++p) {
        for (int s : {1, -1}) {
            Rational ss(s);
            if (ss * rs.bilinear(p, g1) != minus1) continue;
            if (ss * rs.bilinear(p, g2) != minus1) continue;
            if (ss * rs.bilinear(p, g3) != minus1) continue;
            Vec v = sum + Rational(2 * s) * pos[p].coords;
            auto r = rs.find_root(v);
            if (!r) throw std::logic_error("admissible: forced vector is not a root");
            out.push_back(r->first);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool closure_form_admissible(const RootSystem& rs, const std::set<int>& B) {
    std::vector<int> v(B.begin(), B.end());
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b)
            for (size_t c = b + 1; c < v.size(); ++c)
                for (int forced : forced_roots(rs, v[a], v[b], v[c]))
                    if (!B.count(forced)) return false;
    return true;
}

bool orbit_form_admissible(const RootSystem& rs, const WeylGroup& W, const std::set<int>& B) {
    // Enumerate the orbit, then test: for nodes i !~ j, whenever some gamma
    // and gamma - alpha_i + alpha_j both lie in a member, the two reflections
    // must move that member identically.
    std::set<std::set<int>> orbit{B};
    std::vector<std::set<int>> queue{B};
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int g = 0; g < rs.rank(); ++g) {
            auto img = W.act_on_rootset(W.generator(g), queue[head]);
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    for (const auto& member : orbit) {
        for (int i = 0; i < rs.rank(); ++i) {
            for (int j = 0; j < rs.rank(); ++j) {
                if (i == j || rs.nodes_adjacent(i, j)) continue;
                bool pattern = false;
                for (int g : member) {
                    Vec v = rs.positive_root(g).coords - rs.simple_roots()[i].coords +
                            rs.simple_roots()[j].coords;
                    auto r = rs.find_root(v);
                    if (r && r->second == 1 && member.count(r->first)) {
                        pattern = true;
                        break;
                    }
                }
                if (!pattern) continue;
                if (W.act_on_rootset(W.generator(i), member) !=
                    W.act_on_rootset(W.generator(j), member))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_admissible(const RootSystem& rs, const std::set<int>& B, AdmDefinition def,
                   const WeylGroup* W) {
    if (!mutually_orthogonal(rs, B))
        throw std::domain_error("is_admissible: set is not mutually orthogonal");
    if (def == AdmDefinition::ClosureForm) return closure_form_admissible(rs, B);
    if (!W) throw std::invalid_argument("is_admissible: orbit form needs the Weyl group");
    return orbit_form_admissible(rs, *W, B);
}

std::set<int> closure(const RootSystem& rs, const std::set<int>& X) {
    if (!mutually_orthogonal(rs, X))
        throw std::domain_error("closure: set is not mutually orthogonal");
    std::set<int> B = X;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> v(B.begin(), B.end());
        for (size_t a = 0; a < v.size() && !changed; ++a)
            for (size_t b = a + 1; b < v.size() && !changed; ++b)
                for (size_t c = b + 1; c < v.size() && !changed; ++c)
                    for (int forced : forced_roots(rs, v[a], v[b], v[c])) {
                        if (B.count(forced)) continue;
                        for (int old : B)
                            if (!rs.bilinear(old, forced).is_zero())
                                throw std::runtime_error(
                                    "closure: no admissible superset (saturation breaks "
                                    "orthogonality)");
                        B.insert(forced);
                        changed = true;
                        break;
                    }
    }
    return B;
}

std::set<int> closure_in_collection(const std::vector<std::set<int>>& collection,
                                    const std::set<int>& X) {
    const std::set<int>* best = nullptr;
    for (const auto& S : collection) {
        if (!std::includes(S.begin(), S.end(), X.begin(), X.end())) continue;
        if (!best || S.size() < best->size()) best = &S;
    }
    if (!best) throw std::runtime_error("closure: no admissible superset in collection");
    return *best;
}

std::vector<std::set<int>> all_admissible(const RootSystem& rs) {
    int n = (int)rs.positive_roots().size();
    std::vector<std::set<int>> orthogonal{{}};
    // grow mutually orthogonal sets by largest element
    for (size_t head = 0; head < orthogonal.size(); ++head) {
        auto cur = orthogonal[head];  // copy: vector may reallocate
        int start = cur.empty() ? 0 : *cur.rbegin() + 1;
        for (int p = start; p < n; ++p) {
            bool ok = true;
            for (int q : cur)
                if (!rs.bilinear(p, q).is_zero()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            auto next = cur;
            next.insert(p);
            orthogonal.push_back(std::move(next));
        }
    }
    std::vector<std::set<int>> out;
    for (auto& B : orthogonal)
        if (closure_form_admissible(rs, B)) out.push_back(B);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::set<int>>> orbit_partition(const WeylGroup& W,
                                                        const std::vector<std::set<int>>& sets) {
    std::set<std::set<int>> remaining(sets.begin(), sets.end());
    std::vector<std::vector<std::set<int>>> orbits;
    while (!remaining.empty()) {
        std::set<int> seed = *remaining.begin();
        std::set<std::set<int>> orbit{seed};
        std::vector<std::set<int>> queue{seed};
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int g = 0; g < W.system().rank(); ++g) {
                auto img = W.act_on_rootset(W.generator(g), queue[head]);
                if (orbit.insert(img).second) queue.push_back(img);
            }
        }
        std::vector<std::set<int>> members(orbit.begin(), orbit.end());
        for (auto& m : members) remaining.erase(m);
        orbits.push_back(std::move(members));
    }
    return orbits;
}

OrbitPoset orbit_and_hasse(const WeylGroup& W, const std::set<int>& B0) {
    const RootSystem& rs = W.system();
    if (rs.type() == SystemType::G2Folded)
        throw std::invalid_argument(
            "orbit_and_hasse: raising classification is simply-laced only");
    OrbitPoset poset;
    std::map<std::set<int>, int> index;
    poset.elements.push_back(B0);
    index[B0] = 0;
    for (size_t head = 0; head < poset.elements.size(); ++head) {
        for (int g = 0; g < rs.rank(); ++g) {
            auto img = W.act_on_rootset(W.generator(g), poset.elements[head]);
            if (!index.count(img)) {
                index[img] = (int)poset.elements.size();
                poset.elements.push_back(img);
            }
        }
    }

    for (int b = 0; b < (int)poset.elements.size(); ++b) {
        const auto& B = poset.elements[b];
        for (int g = 0; g < rs.rank(); ++g) {
            auto img = W.act_on_rootset(W.generator(g), B);
            if (img == B) continue;
            // classify by the minimal-height roots moved by the reflection
            const Vec& alpha = rs.simple_roots()[g].coords;
            long min_height = -1;
            for (int p : B) {
                if (rs.bilinear(rs.positive_root(p).coords, alpha).is_zero()) continue;
                long h = rs.height_of(p);
                if (min_height < 0 || h < min_height) min_height = h;
            }
            int raise_votes = 0, lower_votes = 0;
            for (int p : B) {
                const Vec& beta = rs.positive_root(p).coords;
                if (rs.bilinear(beta, alpha).is_zero()) continue;
                if (rs.height_of(p) != min_height) continue;
                auto up = rs.find_root(beta + alpha);
                auto down = rs.find_root(beta - alpha);
                if (up && up->second == 1) ++raise_votes;
                if (down && down->second == 1) ++lower_votes;
            }
            if (raise_votes > 0 && lower_votes > 0)
                poset.diagnostics.push_back("ambiguous raise/lower at " + set_name(rs, B) +
                                            " under generator " + std::to_string(g));
            if (raise_votes > 0 && lower_votes == 0)
                poset.raising_edges.push_back({b, index.at(img), g});
        }
    }

    for (int b = 0; b < (int)poset.elements.size(); ++b) {
        bool has_raise = false;
        for (auto& e : poset.raising_edges)
            if (e.from == b) has_raise = true;
        if (!has_raise) poset.maximal_indices.push_back(b);
    }
    if (poset.maximal_indices.size() == 1) {
        poset.max_index = poset.maximal_indices[0];
        // shortest raising distance to the maximum, by reverse BFS
        std::vector<long> l(poset.elements.size(), -1);
        l[poset.max_index] = 0;
        std::queue<int> q;
        q.push(poset.max_index);
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            for (auto& e : poset.raising_edges)
                if (e.to == cur && l[e.from] < 0) {
                    l[e.from] = l[cur] + 1;
                    q.push(e.from);
                }
        }
        long d = 0;
        for (long x : l) {
            if (x < 0) poset.diagnostics.push_back("element cannot reach the maximum");
            d = std::max(d, x);
        }
        poset.heights.resize(poset.elements.size());
        for (size_t i = 0; i < l.size(); ++i) poset.heights[i] = l[i] < 0 ? -1 : d - l[i];
    } else {
        poset.diagnostics.push_back("maximal element is not unique: " +
                                    std::to_string(poset.maximal_indices.size()));
    }
    return poset;
}

std::string set_name(const RootSystem& rs, const std::set<int>& B) {
    std::string s = "{";
    bool first = true;
    for (int p : B) {
        if (!first) s += ",";
        first = false;
        s += rs.root_name(p);
    }
    return s + "}";
}

std::string hasse_dot(const RootSystem& rs, const OrbitPoset& poset) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (size_t i = 0; i < poset.elements.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + set_name(rs, poset.elements[i]) + "\"];\n";
    }
    for (auto& e : poset.raising_edges) {
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               std::to_string(e.gen) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::vector<int> sigma_root_permutation(const RootSystem& d4, const FoldingMap& fold) {
    std::vector<int> perm;
    for (int p = 0; p < (int)d4.positive_roots().size(); ++p) {
        auto [q, sign] = d4.root_of(fold.apply(d4.positive_root(p).coords));
        if (sign != 1) throw std::logic_error("sigma should permute the positive roots");
        perm.push_back(q);
    }
    return perm;
}

std::set<int> reynolds_image(const RootSystem& d4, const FoldingMap& fold, const RootSystem& g2,
                             const std::set<int>& B) {
    std::set<int> out;
    for (int p : B) {
        auto [q, sign] = g2.root_of(fold.reynolds(d4.positive_root(p).coords));
        if (sign != 1) throw std::logic_error("projection of a positive root should be positive");
        out.insert(q);
    }
    return out;
}

FoldedAdmissibles folded_admissibles(const RootSystem& d4, const FoldingMap& fold,
                                     const RootSystem& g2, const WeylGroup& Wg2) {
    auto perm = sigma_root_permutation(d4, fold);
    FoldedAdmissibles out;
    std::set<std::set<int>> images;
    for (const auto& B : all_admissible(d4)) {
        std::set<int> mapped;
        for (int p : B) mapped.insert(perm[p]);
        if (mapped != B) continue;
        images.insert(reynolds_image(d4, fold, g2, B));
    }
    out.sets.assign(images.begin(), images.end());
    std::vector<std::set<int>> nonempty;
    for (auto& S : out.sets)
        if (!S.empty()) nonempty.push_back(S);
    out.orbits = orbit_partition(Wg2, nonempty);
    return out;
}

}  // namespace brauer
