#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsq/poly.hpp"

using namespace lsq;

namespace {

NCPoly L(Alphabet a, unsigned i) { return NCPoly::letter(a, i); }

NCPoly P(const std::string& s, Alphabet hint = Alphabet::X) { return parse_poly(s, hint); }

// ad_{x0}^m(x1), the depth-one Lie generators of Q<X>.
NCPoly adx0(int m) {
    NCPoly p = L(Alphabet::X, 1);
    for (int i = 0; i < m; ++i) p = commutator(L(Alphabet::X, 0), p);
    return p;
}

// Brute-force shuffle of two words: enumerate every interleaving.
void interleave(const Key& u, size_t i, const Key& v, size_t j, Key& acc, NCPoly& out) {
    if (i == u.size() && j == v.size()) {
        out.add_term(acc, 1);
        return;
    }
    if (i < u.size()) {
        acc.push_back(u[i]);
        interleave(u, i + 1, v, j, acc, out);
        acc.pop_back();
    }
    if (j < v.size()) {
        acc.push_back(v[j]);
        interleave(u, i, v, j + 1, acc, out);
        acc.pop_back();
    }
}

NCPoly brute_shuffle(Alphabet a, const Key& u, const Key& v) {
    NCPoly out(a);
    Key acc;
    interleave(u, 0, v, 0, acc, out);
    return out;
}

std::vector<Key> all_x_words_of_length(size_t len) {
    std::vector<Key> out;
    for (size_t mask = 0; mask < (size_t(1) << len); ++mask) {
        Key w;
        for (size_t i = 0; i < len; ++i) w.push_back(char((mask >> i) & 1));
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("concatenation product") {
    CHECK(L(Alphabet::X, 0) * L(Alphabet::X, 1) == P("x0 x1"));
    CHECK(NCPoly::one(Alphabet::B) * P("b2 b0", Alphabet::B) == P("b2 b0", Alphabet::B));
    CHECK((P("y1 + y2", Alphabet::Y) * P("y1", Alphabet::Y)) == P("y1 y1 + y2 y1", Alphabet::Y));
    // associativity and unit on sampled triples
    NCPoly a = P("x0 x1 - 2*x1 x0"), b = P("x1 + x0 x0"), c = P("3/2*x0");
    CHECK((a * b) * c == a * (b * c));
    CHECK(NCPoly::one(Alphabet::X) * a == a);
    CHECK(a * NCPoly::one(Alphabet::X) == a);
    CHECK_THROWS_AS(require_same_alphabet(a, P("y1", Alphabet::Y)), std::invalid_argument);
}

TEST_CASE("shuffle examples") {
    CHECK(shuffle(L(Alphabet::X, 0), L(Alphabet::X, 1)) == P("x0 x1 + x1 x0"));
    CHECK(shuffle(P("x0 x1"), P("x1")) == P("2*x0 x1 x1 + x1 x0 x1"));
    CHECK(shuffle(NCPoly::one(Alphabet::B), P("b0 b3", Alphabet::B)) == P("b0 b3", Alphabet::B));
}

TEST_CASE("shuffle equals brute-force interleaving, X words up to total length 8") {
    for (size_t l1 = 0; l1 <= 4; ++l1)
        for (size_t l2 = l1; l1 + l2 <= 8; ++l2)
            for (auto& u : all_x_words_of_length(l1))
                for (auto& v : all_x_words_of_length(l2)) {
                    NCPoly pu = NCPoly::word(Alphabet::X, u);
                    NCPoly pv = NCPoly::word(Alphabet::X, v);
                    REQUIRE(shuffle(pu, pv) == brute_shuffle(Alphabet::X, u, v));
                }
}

TEST_CASE("shuffle equals brute-force interleaving, B words up to total weight 5") {
    for (int w1 = 1; w1 <= 2; ++w1)
        for (int w2 = w1; w1 + w2 <= 5; ++w2)
            for (auto& u : words_of_weight(Alphabet::B, w1))
                for (auto& v : words_of_weight(Alphabet::B, w2)) {
                    NCPoly pu = NCPoly::word(Alphabet::B, u);
                    NCPoly pv = NCPoly::word(Alphabet::B, v);
                    REQUIRE(shuffle(pu, pv) == brute_shuffle(Alphabet::B, u, v));
                }
}

TEST_CASE("stuffle examples") {
    CHECK(stuffle(L(Alphabet::Y, 1), L(Alphabet::Y, 2)) == P("y1 y2 + y2 y1 + y3", Alphabet::Y));
    CHECK(stuffle(NCPoly::one(Alphabet::Y), L(Alphabet::Y, 5)) == P("y5", Alphabet::Y));
    CHECK(stuffle(L(Alphabet::Y, 1), L(Alphabet::Y, 1)) == P("2*y1 y1 + y2", Alphabet::Y));
}

TEST_CASE("balanced quasi-shuffle examples") {
    CHECK(balanced_stuffle(L(Alphabet::B, 0), L(Alphabet::B, 1)) ==
          P("b0 b1 + b1 b0", Alphabet::B));
    CHECK(balanced_stuffle(L(Alphabet::B, 1), L(Alphabet::B, 1)) ==
          P("2*b1 b1 + b2", Alphabet::B));
    CHECK(balanced_stuffle(NCPoly::one(Alphabet::B), P("b0 b2", Alphabet::B)) ==
          P("b0 b2", Alphabet::B));
    // the merge term is absent whenever one index is zero
    NCPoly r = balanced_stuffle(L(Alphabet::B, 0), L(Alphabet::B, 3));
    CHECK(r == P("b0 b3 + b3 b0", Alphabet::B));
}

TEST_CASE("quasi-shuffles are associative and commutative, total weight <= 8") {
    auto check_triple = [](auto prod, Alphabet a, const Key& u, const Key& v, const Key& w) {
        NCPoly pu = NCPoly::word(a, u), pv = NCPoly::word(a, v), pw = NCPoly::word(a, w);
        REQUIRE(prod(pu, pv) == prod(pv, pu));
        REQUIRE(prod(prod(pu, pv), pw) == prod(pu, prod(pv, pw)));
    };
    for (int w1 = 1; w1 <= 6; ++w1)
        for (int w2 = 1; w1 + w2 <= 7; ++w2)
            for (int w3 = 1; w1 + w2 + w3 <= 8; ++w3) {
                for (auto& u : words_of_weight(Alphabet::Y, w1))
                    for (auto& v : words_of_weight(Alphabet::Y, w2))
                        for (auto& w : words_of_weight(Alphabet::Y, w3))
                            check_triple([](const NCPoly& p, const NCPoly& q) { return stuffle(p, q); },
                                         Alphabet::Y, u, v, w);
                for (auto& u : words_of_weight(Alphabet::B, w1))
                    for (auto& v : words_of_weight(Alphabet::B, w2))
                        for (auto& w : words_of_weight(Alphabet::B, w3))
                            check_triple(
                                [](const NCPoly& p, const NCPoly& q) { return balanced_stuffle(p, q); },
                                Alphabet::B, u, v, w);
            }
}

TEST_CASE("weight and depth behaviour of the products") {
    std::mt19937 rng(12345);
    auto random_word = [&](Alphabet a, int wt) {
        auto ws = words_of_weight(a, wt);
        return ws[rng() % ws.size()];
    };
    for (int trial = 0; trial < 40; ++trial) {
        int w1 = 1 + int(rng() % 4), w2 = 1 + int(rng() % 4);
        for (Alphabet a : {Alphabet::X, Alphabet::Y, Alphabet::B}) {
            Key u = random_word(a, w1), v = random_word(a, w2);
            NCPoly pu = NCPoly::word(a, u), pv = NCPoly::word(a, v);
            NCPoly sh = shuffle(pu, pv);
            REQUIRE(sh.is_bihomogeneous());
            REQUIRE(sh.weight() == w1 + w2);
            REQUIRE(sh.depth() == key_depth(a, u) + key_depth(a, v));
            if (a == Alphabet::X) continue;
            NCPoly qs = a == Alphabet::Y ? stuffle(pu, pv) : balanced_stuffle(pu, pv);
            REQUIRE(qs.is_homogeneous_weight());
            REQUIRE(qs.weight() == w1 + w2);
            for (auto& [w, c] : qs.terms())
                REQUIRE(key_depth(a, w) <= key_depth(a, u) + key_depth(a, v));
        }
    }
}

TEST_CASE("depth-graded top part of the stuffle is the shuffle on Y") {
    for (int w1 = 1; w1 <= 3; ++w1)
        for (int w2 = 1; w1 + w2 <= 6; ++w2)
            for (auto& u : words_of_weight(Alphabet::Y, w1))
                for (auto& v : words_of_weight(Alphabet::Y, w2)) {
                    NCPoly pu = NCPoly::word(Alphabet::Y, u), pv = NCPoly::word(Alphabet::Y, v);
                    int top = key_depth(Alphabet::Y, u) + key_depth(Alphabet::Y, v);
                    NCPoly graded(Alphabet::Y);
                    NCPoly st = stuffle(pu, pv);
                    for (auto& [w, c] : st.terms())
                        if (key_depth(Alphabet::Y, w) == top) graded.add_term(w, c);
                    REQUIRE(graded == shuffle(pu, pv));
                }
}

TEST_CASE("coefficient lookup") {
    CHECK(P("x0 x1 + 2*x1 x0").coeff(key_from_letters({1, 0})) == 2);
    CHECK(NCPoly::zero(Alphabet::X).coeff(key_from_letters({0, 1})) == 0);
    for (int m = 1; m <= 8; ++m) {
        NCPoly ad = adx0(m - 1);
        for (int k = 0; k <= m - 1; ++k) {
            Key w(size_t(m - k - 1), char(0));
            w.push_back(char(1));
            w += Key(size_t(k), char(0));
            CHECK(ad.coeff(w) == Rat(binomial(m - 1, k)) * (k % 2 ? -1 : 1));
        }
        CHECK(ad.term_count() == size_t(m));
    }
}

TEST_CASE("commutator") {
    CHECK(commutator(L(Alphabet::X, 0), L(Alphabet::X, 1)) == P("x0 x1 - x1 x0"));
    NCPoly p = P("x0 x1 + 1/3*x1 x1");
    CHECK(commutator(p, p).is_zero());
    CHECK(commutator(L(Alphabet::B, 1), L(Alphabet::B, 2)) == P("b1 b2 - b2 b1", Alphabet::B));
}

TEST_CASE("bidegree split") {
    auto parts = P("x0 x1 + x1").bidegree_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(Bidegree{2, 1}) == P("x0 x1"));
    CHECK(parts.at(Bidegree{1, 1}) == P("x1"));
    auto single = P("b0 b3", Alphabet::B).bidegree_split();
    REQUIRE(single.size() == 1);
    CHECK(single.at(Bidegree{4, 1}) == P("b0 b3", Alphabet::B));
    CHECK(NCPoly::zero(Alphabet::Y).bidegree_split().empty());
}

TEST_CASE("parser round trips and errors") {
    for (const char* s : {"x0 x1 - 2/3*x1 x0", "x1", "-x0 + 5*x1 x1 x0"}) {
        NCPoly p = P(s);
        CHECK(parse_poly(p.to_string(), Alphabet::X) == p);
    }
    NCPoly q = P("y1 y3 - 7/2*y2 y2", Alphabet::Y);
    CHECK(parse_poly(q.to_string(), Alphabet::Y) == q);
    NCPoly r = P("b0 b2 + b1 b1 b0", Alphabet::B);
    CHECK(parse_poly(r.to_string(), Alphabet::B) == r);
    CHECK(P("0", Alphabet::X).is_zero());
    CHECK_THROWS_AS(parse_poly("x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y0", Alphabet::Y), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x0 + y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x0 +"), std::invalid_argument);
}
