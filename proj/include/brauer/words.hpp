#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

enum class SymKind : uint8_t { R, E, Delta, DeltaInv };

struct GenSymbol {
    SymKind kind;
    int node = 0;  // unused for Delta / DeltaInv

    bool operator==(const GenSymbol& o) const { return kind == o.kind && node == o.node; }
};

using MonoidWord = std::vector<GenSymbol>;

inline GenSymbol R(int node) { return {SymKind::R, node}; }
inline GenSymbol E(int node) { return {SymKind::E, node}; }

/// Parses words like "e1 e0", "R3 E1 E2", "d r0", "d' e1". Case of r/e is not
/// significant; "d" is the loop parameter, "d'" its inverse.
MonoidWord parse_word(const std::string& text);

std::string word_to_string(const MonoidWord& w, bool uppercase = false);

MonoidWord reversed(const MonoidWord& w);

/// Concatenation of n copies of w.
MonoidWord power(const MonoidWord& w, int n);

}  // namespace brauer
