#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsq {

// The three alphabets. X = {x0, x1}, Y = {y1, y2, ...}, B = {b0, b1, ...}.
enum class Alphabet : uint8_t { X, Y, B };

const char* alphabet_name(Alphabet a);
char alphabet_letter_char(Alphabet a); // 'x', 'y' or 'b'

// A word is stored as a byte string of letter indices; the alphabet tag is
// carried separately (by the polynomial or by a Word value).
using Key = std::string;

int letter_weight(Alphabet a, unsigned idx);
int letter_depth(Alphabet a, unsigned idx);
bool letter_valid(Alphabet a, unsigned idx);

int key_weight(Alphabet a, const Key& w);
int key_depth(Alphabet a, const Key& w);

// Canonical term order: by length, then lexicographic by letter index.
struct LenLex {
    bool operator()(const Key& a, const Key& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct Bidegree {
    int weight = 0;
    int depth = 0;
    auto operator<=>(const Bidegree&) const = default;
};

struct Word {
    Alphabet alph;
    Key key;

    int weight() const { return key_weight(alph, key); }
    int depth() const { return key_depth(alph, key); }
    size_t length() const { return key.size(); }
};

std::string key_to_string(Alphabet a, const Key& w); // "x0 x1", "1" for the empty word
Key key_from_letters(std::initializer_list<unsigned> idx);

// All words of the given weight (and optionally depth) in canonical order.
std::vector<Key> words_of_weight(Alphabet a, int m);
std::vector<Key> words_of_bidegree(Alphabet a, int m, int n);

} // namespace lsq
