#include "brauer/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brauer {

MonoidWord parse_word(const std::string& text) {
    MonoidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;  // empty word
        if (tok == "d" || tok == "delta") {
            w.push_back({SymKind::Delta, 0});
            continue;
        }
        if (tok == "d'" || tok == "delta'" || tok == "delta_inv") {
            w.push_back({SymKind::DeltaInv, 0});
            continue;
        }
        char c = (char)std::tolower(tok[0]);
        if ((c == 'r' || c == 'e') && tok.size() > 1) {
            int node = std::stoi(tok.substr(1));
            w.push_back({c == 'r' ? SymKind::R : SymKind::E, node});
            continue;
        }
        throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    }
    return w;
}

std::string word_to_string(const MonoidWord& w, bool uppercase) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) s += " ";
        switch (g.kind) {
            case SymKind::R: s += (uppercase ? "R" : "r") + std::to_string(g.node); break;
            case SymKind::E: s += (uppercase ? "E" : "e") + std::to_string(g.node); break;
            case SymKind::Delta: s += "d"; break;
            case SymKind::DeltaInv: s += "d'"; break;
        }
    }
    return s;
}

MonoidWord reversed(const MonoidWord& w) {
    MonoidWord r(w.rbegin(), w.rend());
    return r;
}

MonoidWord power(const MonoidWord& w, int n) {
    MonoidWord r;
    for (int i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

}  // namespace brauer
