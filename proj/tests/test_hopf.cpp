#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "lsq/freelie.hpp"

using namespace lsq;

namespace {

NCPoly L(Alphabet a, unsigned i) { return NCPoly::letter(a, i); }
NCPoly P(const std::string& s, Alphabet hint = Alphabet::X) { return parse_poly(s, hint); }

using Triple = std::array<Key, 3>;
using Tensor3 = std::map<Triple, Rat>;

void add3(Tensor3& t, const Triple& k, const Rat& c) {
    auto it = t.find(k);
    if (it == t.end()) {
        if (c != 0) t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t.erase(it);
}

// (Delta (x) id) . Delta and (id (x) Delta) . Delta of a single word.
Tensor3 delta_left(Alphabet a, const Key& w) {
    Tensor3 out;
    Tensor2 outer = coproduct(NCPoly::word(a, w));
    for (auto& [pair, c] : outer.terms()) {
        Tensor2 inner = coproduct(NCPoly::word(a, pair.first));
        for (auto& [pair2, c2] : inner.terms())
            add3(out, {pair2.first, pair2.second, pair.second}, c * c2);
    }
    return out;
}

Tensor3 delta_right(Alphabet a, const Key& w) {
    Tensor3 out;
    Tensor2 outer = coproduct(NCPoly::word(a, w));
    for (auto& [pair, c] : outer.terms()) {
        Tensor2 inner = coproduct(NCPoly::word(a, pair.second));
        for (auto& [pair2, c2] : inner.terms())
            add3(out, {pair.first, pair2.first, pair2.second}, c * c2);
    }
    return out;
}

} // namespace

TEST_CASE("coproduct examples") {
    Tensor2 dx0(Alphabet::X);
    dx0.add_term(key_from_letters({0}), Key{}, 1);
    dx0.add_term(Key{}, key_from_letters({0}), 1);
    CHECK(coproduct(L(Alphabet::X, 0)) == dx0);

    Tensor2 dx0x1(Alphabet::X);
    dx0x1.add_term(key_from_letters({0, 1}), Key{}, 1);
    dx0x1.add_term(key_from_letters({0}), key_from_letters({1}), 1);
    dx0x1.add_term(key_from_letters({1}), key_from_letters({0}), 1);
    dx0x1.add_term(Key{}, key_from_letters({0, 1}), 1);
    CHECK(coproduct(P("x0 x1")) == dx0x1);

    Tensor2 unit(Alphabet::Y);
    unit.add_term(Key{}, Key{}, 1);
    CHECK(coproduct(NCPoly::one(Alphabet::Y)) == unit);
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(commutator(L(Alphabet::X, 0), L(Alphabet::X, 1))));
    CHECK_FALSE(is_primitive(P("x0 x1")));
    CHECK(is_primitive(L(Alphabet::Y, 7)));
}

TEST_CASE("antipode examples") {
    CHECK(antipode(P("x0 x1")) == P("x1 x0"));
    CHECK(antipode(L(Alphabet::X, 1)) == -L(Alphabet::X, 1));
    NCPoly c = commutator(L(Alphabet::X, 0), L(Alphabet::X, 1));
    CHECK(antipode(c) == -c);
    CHECK(antipode(P("b0 b2", Alphabet::B)) == P("b2 b0", Alphabet::B));
    CHECK(antipode(L(Alphabet::B, 3)) == -L(Alphabet::B, 3));
    CHECK(antipode(NCPoly::one(Alphabet::B)) == NCPoly::one(Alphabet::B));
    // involution on a sample
    NCPoly p = P("b0 b1 b2 - 3*b1 b0", Alphabet::B);
    CHECK(antipode(antipode(p)) == p);
}

TEST_CASE("Y reversal") {
    CHECK(reverse_Y(P("y1 y3", Alphabet::Y)) == P("y3 y1", Alphabet::Y));
    CHECK(reverse_Y(L(Alphabet::Y, 2)) == L(Alphabet::Y, 2));
    NCPoly p = P("y1 y2 y4", Alphabet::Y);
    CHECK(reverse_Y(reverse_Y(p)) == p);
}

TEST_CASE("coassociativity on all words of weight <= 6") {
    for (Alphabet a : {Alphabet::X, Alphabet::Y, Alphabet::B})
        for (int m = 1; m <= 6; ++m)
            for (auto& w : words_of_weight(a, m)) REQUIRE(delta_left(a, w) == delta_right(a, w));
}

TEST_CASE("coproduct is an algebra morphism for concatenation") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        Alphabet a = std::array{Alphabet::X, Alphabet::Y, Alphabet::B}[trial % 3];
        int w1 = 1 + int(rng() % 4), w2 = 1 + int(rng() % 4);
        auto ws1 = words_of_weight(a, w1), ws2 = words_of_weight(a, w2);
        NCPoly p = NCPoly::word(a, ws1[rng() % ws1.size()]);
        NCPoly q = NCPoly::word(a, ws2[rng() % ws2.size()]);
        REQUIRE(coproduct(p * q) == coproduct(p) * coproduct(q));
    }
}

TEST_CASE("coproduct is dual to the shuffle product on X words up to length 6") {
    std::vector<std::vector<Key>> by_len(7);
    by_len[0] = {Key{}};
    for (int l = 1; l <= 6; ++l) by_len[l] = words_of_weight(Alphabet::X, l);
    for (int lw = 0; lw <= 6; ++lw)
        for (auto& w : by_len[lw]) {
            Tensor2 dw = coproduct(NCPoly::word(Alphabet::X, w));
            for (int lu = 0; lu <= lw; ++lu)
                for (auto& u : by_len[lu])
                    for (auto& v : by_len[lw - lu]) {
                        Rat lhs = shuffle(NCPoly::word(Alphabet::X, u),
                                          NCPoly::word(Alphabet::X, v))
                                      .coeff(w);
                        REQUIRE(lhs == dw.coeff(u, v));
                    }
        }
}

TEST_CASE("reversal commutes with the Y coproduct, weight <= 6") {
    auto rev = [](Alphabet a, const Key& w) {
        return reverse_Y(NCPoly::word(a, w));
    };
    for (int m = 1; m <= 6; ++m)
        for (auto& w : words_of_weight(Alphabet::Y, m)) {
            Tensor2 lhs = coproduct(reverse_Y(NCPoly::word(Alphabet::Y, w)));
            Tensor2 rhs = apply_each(coproduct(NCPoly::word(Alphabet::Y, w)), rev, rev);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("antipode negates Lie elements of weight <= 6") {
    for (Alphabet a : {Alphabet::X, Alphabet::B})
        for (int m = 1; m <= 6; ++m)
            for (int n = 0; n <= m; ++n)
                for (auto& e : lie_basis(a, m, n).elems) REQUIRE(antipode(e) == -e);
}
