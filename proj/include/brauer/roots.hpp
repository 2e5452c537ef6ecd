#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "brauer/exact.hpp"

namespace brauer {

struct Root {
    Vec coords;                       // ambient orthonormal (epsilon) coordinates
    std::vector<long> simple_coords;  // integer coordinates in the simple-root basis
};

long height(const Root& r);

enum class SystemType { A, D, G2Folded };

/// Triality automorphism of the D4 root system, as an exact 4x4 matrix of
/// order 3, together with the averaging projection onto its fixed plane.
class FoldingMap {
public:
    static FoldingMap d4_triality();

    Vec apply(const Vec& v) const;     // sigma
    Vec reynolds(const Vec& v) const;  // (x + sigma x + sigma^2 x) / 3

    const std::array<std::array<Rational, 4>, 4>& matrix() const { return m_; }
    int order() const { return 3; }

private:
    std::array<std::array<Rational, 4>, 4> m_;
};

/// A finite crystallographic root system realized by exact vectors.
/// Supported: A(1..8), D(4..8) in the realizations
///   A_n: alpha_i = e_{i+1} - e_i,
///   D_n: alpha_1 = e_1 + e_2, alpha_i = e_i - e_{i-1} (i >= 2),
/// and the folded G2 system spanned by beta_0 = (alpha_1+alpha_2+alpha_4)/3
/// and beta_1 = alpha_3 inside R^4.
class RootSystem {
public:
    static RootSystem build(SystemType t, int rank);
    static RootSystem build(const std::string& label);  // "A4", "D4", "G2"

    SystemType type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const;
    int ambient_dim() const { return ambient_; }

    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& positive_root(int idx) const { return positive_.at(idx); }
    // index in positive_roots() of simple root #i (0-based node index)
    int simple_index(int i) const { return simple_index_.at(i); }

    // Diagram node labels: 1..n for A and D, 0..1 for G2.
    int node_base() const { return type_ == SystemType::G2Folded ? 0 : 1; }
    int node_of_label(int label) const;  // 0-based simple-root index

    Rational bilinear(const Vec& a, const Vec& b) const { return dot(a, b); }
    Rational bilinear(int i, int j) const { return dot(positive_[i].coords, positive_[j].coords); }

    // Looks a vector up among the roots: returns (positive root index, sign).
    std::optional<std::pair<int, int>> find_root(const Vec& v) const;
    // As above but throws std::domain_error if v is not a root.
    std::pair<int, int> root_of(const Vec& v) const;

    // Reflection in the given root applied to an arbitrary vector.
    Vec reflect(const Vec& v, const Vec& root) const;

    long height_of(int idx) const { return height(positive_[idx]); }
    std::string root_name(int idx) const;  // simple-coordinate string, e.g. "[1,0,1,0]"

    bool nodes_adjacent(int i, int j) const;  // nonzero inner product of simple roots

private:
    SystemType type_;
    int rank_ = 0;
    int ambient_ = 0;
    std::vector<Root> simple_;
    std::vector<Root> positive_;
    std::vector<int> simple_index_;

    void close_and_sort();
    std::vector<long> solve_simple_coords(const Vec& v) const;
};

}  // namespace brauer
