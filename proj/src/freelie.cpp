#include "lsq/freelie.hpp"

namespace lsq {

bool is_lyndon(const Key& w) {
    if (w.empty()) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w.compare(i, Key::npos, w) <= 0) return false; // suffix <= w
    return true;
}

std::vector<Key> lyndon_words(Alphabet a, int m, int n) {
    std::vector<Key> out;
    for (auto& w : words_of_bidegree(a, m, n))
        if (is_lyndon(w)) out.push_back(std::move(w));
    std::sort(out.begin(), out.end()); // plain lex, matching the letter order
    return out;
}

std::pair<Key, Key> lyndon_factorization(const Key& w) {
    if (w.size() < 2) throw std::invalid_argument("factorization needs length >= 2");
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
        if (w.compare(i, Key::npos, w, best, Key::npos) < 0) best = i;
    return {w.substr(0, best), w.substr(best)};
}

NCPoly lyndon_bracketing(Alphabet a, const Key& w) {
    if (w.size() == 1) return NCPoly::word(a, w);
    auto [u, v] = lyndon_factorization(w);
    return commutator(lyndon_bracketing(a, u), lyndon_bracketing(a, v));
}

SubspaceBasis lie_basis(Alphabet a, int m, int n) {
    SubspaceBasis b;
    b.space = std::string("Lie(") + alphabet_name(a) + ")";
    b.weight = m;
    b.depth = n;
    for (auto& w : lyndon_words(a, m, n)) b.elems.push_back(lyndon_bracketing(a, w));
    return b;
}

} // namespace lsq
