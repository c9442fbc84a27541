#pragma once

#include <functional>

#include "lsq/poly.hpp"

namespace lsq {

// Ordered pair of words, the basis of Q<A> (x) Q<A>.
using KeyPair = std::pair<Key, Key>;

struct PairLenLex {
    bool operator()(const KeyPair& a, const KeyPair& b) const {
        LenLex lt;
        if (lt(a.first, b.first)) return true;
        if (lt(b.first, a.first)) return false;
        return lt(a.second, b.second);
    }
};

// Element of the tensor square Q<A> (x) Q<A>.
class Tensor2 {
public:
    using TermMap = std::map<KeyPair, Rat, PairLenLex>;

    explicit Tensor2(Alphabet a) : alph_(a) {}

    Alphabet alphabet() const { return alph_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Key& u, const Key& v) const;
    void add_term(const Key& u, const Key& v, const Rat& c);

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rat& c);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Rat& c, Tensor2 a) { return a *= c; }
    bool operator==(const Tensor2& o) const { return alph_ == o.alph_ && terms_ == o.terms_; }

    // Componentwise concatenation product.
    friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);

    std::string to_string() const; // one "(u | v) : c" line per term

private:
    Alphabet alph_;
    TermMap terms_;
};

Tensor2 tensor(const NCPoly& p, const NCPoly& q);

// Applies word-linear maps to the two tensor factors: sum c * f(u) (x) g(v).
Tensor2 apply_each(const Tensor2& t,
                   const std::function<NCPoly(Alphabet, const Key&)>& f,
                   const std::function<NCPoly(Alphabet, const Key&)>& g);

// The coproduct with every letter primitive, extended as an algebra morphism
// for concatenation: Delta(w) is the sum over all ways to deal the letters of
// w into an ordered pair of subwords.
Tensor2 coproduct(const NCPoly& p);
Tensor2 reduced_coproduct(const NCPoly& p); // Delta(p) - p(x)1 - 1(x)p
bool is_primitive(const NCPoly& p);

// Antipode: signed reversal, w = a_1...a_r -> (-1)^r a_r...a_1.
NCPoly antipode(const NCPoly& p);
// R_Y: unsigned word reversal on Q<Y>.
NCPoly reverse_Y(const NCPoly& p);

} // namespace lsq
