#pragma once

#include <map>
#include <optional>

#include "lsq/rational.hpp"
#include "lsq/word.hpp"

namespace lsq {

// Sparse noncommutative polynomial with exact rational coefficients.
// Terms are kept in canonical (length-lex) order; zero coefficients are
// never stored.
class NCPoly {
public:
    using TermMap = std::map<Key, Rat, LenLex>;

    explicit NCPoly(Alphabet a) : alph_(a) {}

    static NCPoly zero(Alphabet a) { return NCPoly(a); }
    static NCPoly one(Alphabet a);
    static NCPoly letter(Alphabet a, unsigned idx);
    static NCPoly word(Alphabet a, Key w, Rat c = 1);

    Alphabet alphabet() const { return alph_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rat coeff(const Key& w) const;
    void add_term(const Key& w, const Rat& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rat& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rat& c) { return a *= c; }
    friend NCPoly operator*(const Rat& c, NCPoly a) { return a *= c; }
    NCPoly operator-() const;
    bool operator==(const NCPoly& o) const { return alph_ == o.alph_ && terms_ == o.terms_; }

    // Word concatenation product, extended bilinearly.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    // Homogeneity helpers. weight()/depth() require (bi)homogeneous input.
    bool is_homogeneous_weight() const;
    bool is_bihomogeneous() const;
    int weight() const;
    int depth() const;
    std::map<Bidegree, NCPoly> bidegree_split() const;

    std::string to_string() const;

private:
    Alphabet alph_;
    TermMap terms_;
};

void require_same_alphabet(const NCPoly& a, const NCPoly& b);

// Shuffle product; one letter-level recursion serves all three alphabets.
NCPoly shuffle(const NCPoly& p, const NCPoly& q);
// Quasi-shuffle on Y: colliding letters y_i, y_j merge into y_{i+j}.
NCPoly stuffle(const NCPoly& p, const NCPoly& q);
// Quasi-shuffle on B whose merge term appears only when both indices are
// positive.
NCPoly balanced_stuffle(const NCPoly& p, const NCPoly& q);

NCPoly commutator(const NCPoly& p, const NCPoly& q);

// Parses the canonical polynomial syntax, e.g. "x0 x1 - 2/3*x1 x0".
// The alphabet is inferred from the letters; `hint` is used for purely
// scalar input. Throws std::invalid_argument on malformed input.
NCPoly parse_poly(const std::string& text, std::optional<Alphabet> hint = std::nullopt);

} // namespace lsq
