#include "lsq/word.hpp"

#include <algorithm>

namespace lsq {

const char* alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::X: return "X";
        case Alphabet::Y: return "Y";
        case Alphabet::B: return "B";
    }
    return "?";
}

char alphabet_letter_char(Alphabet a) {
    switch (a) {
        case Alphabet::X: return 'x';
        case Alphabet::Y: return 'y';
        case Alphabet::B: return 'b';
    }
    return '?';
}

bool letter_valid(Alphabet a, unsigned idx) {
    switch (a) {
        case Alphabet::X: return idx <= 1;
        case Alphabet::Y: return idx >= 1;
        case Alphabet::B: return true;
    }
    return false;
}

int letter_weight(Alphabet a, unsigned idx) {
    switch (a) {
        case Alphabet::X: return 1;
        case Alphabet::Y: return static_cast<int>(idx);
        case Alphabet::B: return idx == 0 ? 1 : static_cast<int>(idx);
    }
    return 0;
}

int letter_depth(Alphabet a, unsigned idx) {
    switch (a) {
        case Alphabet::X: return idx == 1 ? 1 : 0;
        case Alphabet::Y: return 1;
        case Alphabet::B: return idx == 0 ? 0 : 1;
    }
    return 0;
}

int key_weight(Alphabet a, const Key& w) {
    int s = 0;
    for (unsigned char c : w) s += letter_weight(a, c);
    return s;
}

int key_depth(Alphabet a, const Key& w) {
    int s = 0;
    for (unsigned char c : w) s += letter_depth(a, c);
    return s;
}

std::string key_to_string(Alphabet a, const Key& w) {
    if (w.empty()) return "1";
    std::string out;
    char ch = alphabet_letter_char(a);
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += ch;
        out += std::to_string(static_cast<unsigned>(static_cast<unsigned char>(w[i])));
    }
    return out;
}

Key key_from_letters(std::initializer_list<unsigned> idx) {
    Key k;
    k.reserve(idx.size());
    for (unsigned i : idx) k.push_back(static_cast<char>(i));
    return k;
}

namespace {

void enumerate(Alphabet a, int rem_weight, Key& cur, std::vector<Key>& out) {
    if (rem_weight == 0) {
        out.push_back(cur);
        return;
    }
    unsigned lo = (a == Alphabet::Y) ? 1u : 0u;
    unsigned hi;
    switch (a) {
        case Alphabet::X: hi = 1; break;
        default: hi = static_cast<unsigned>(rem_weight); break;
    }
    for (unsigned idx = lo; idx <= hi; ++idx) {
        int w = letter_weight(a, idx);
        if (w > rem_weight) continue;
        cur.push_back(static_cast<char>(idx));
        enumerate(a, rem_weight - w, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Key> words_of_weight(Alphabet a, int m) {
    std::vector<Key> out;
    Key cur;
    enumerate(a, m, cur, out);
    std::sort(out.begin(), out.end(), LenLex{});
    return out;
}

std::vector<Key> words_of_bidegree(Alphabet a, int m, int n) {
    std::vector<Key> out;
    for (auto& w : words_of_weight(a, m))
        if (key_depth(a, w) == n) out.push_back(std::move(w));
    return out;
}

} // namespace lsq
