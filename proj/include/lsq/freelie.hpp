#pragma once

#include "lsq/tensor.hpp"

namespace lsq {

// An ordered basis of a bihomogeneous subspace of some Q<A>.
struct SubspaceBasis {
    std::string space;
    int weight = 0;
    int depth = 0;
    std::vector<NCPoly> elems;

    size_t dim() const { return elems.size(); }
};

// Lyndon words of bidegree (m, n), in increasing lexicographic order.
// Letter order is by index: x0 < x1, y1 < y2 < ..., b0 < b1 < ...
std::vector<Key> lyndon_words(Alphabet a, int m, int n);

bool is_lyndon(const Key& w);

// Standard (right) factorization of a Lyndon word of length >= 2: the split
// point of the lexicographically least proper suffix.
std::pair<Key, Key> lyndon_factorization(const Key& w);

// Standard-bracketing expansion of a Lyndon word.
NCPoly lyndon_bracketing(Alphabet a, const Key& w);

// Basis of Lie(A)[m, n] given by bracketed Lyndon words.
SubspaceBasis lie_basis(Alphabet a, int m, int n);

inline bool is_lie(const NCPoly& p) { return is_primitive(p); }

} // namespace lsq
