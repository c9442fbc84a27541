#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsq/qlinalg.hpp"
#include "lsq/stabilizers.hpp"

using namespace lsq;

namespace {

NCPoly L(Alphabet a, unsigned i) { return NCPoly::letter(a, i); }
NCPoly P(const std::string& s, Alphabet hint = Alphabet::B) { return parse_poly(s, hint); }

NCPoly adx0(int m) {
    NCPoly p = L(Alphabet::X, 1);
    for (int i = 0; i < m; ++i) p = commutator(L(Alphabet::X, 0), p);
    return p;
}

NCPoly adb0(int m) {
    NCPoly p = L(Alphabet::B, 1);
    for (int i = 0; i < m; ++i) p = commutator(L(Alphabet::B, 0), p);
    return p;
}

std::vector<NCPoly> ls_elems(int max_weight) {
    std::vector<NCPoly> out;
    for (int m = 1; m <= max_weight; ++m)
        for (int n = 0; n <= m; ++n)
            for (auto& e : ls_basis(m, n).elems) out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("theta_X relabels letters") {
    CHECK(theta_X(parse_poly("x0 x1")) == P("b0 b1"));
    CHECK(theta_X(commutator(L(Alphabet::X, 0), L(Alphabet::X, 1))) ==
          commutator(L(Alphabet::B, 0), L(Alphabet::B, 1)));
    CHECK(theta_X(NCPoly::one(Alphabet::X)) == NCPoly::one(Alphabet::B));
    // morphism property
    NCPoly a = parse_poly("x0 x1 - 2*x1 x0"), b = parse_poly("x1 + x0");
    CHECK(theta_X(a * b) == theta_X(a) * theta_X(b));
}

TEST_CASE("theta_Y reverses and relabels") {
    CHECK(theta_Y(parse_poly("y1 y3", Alphabet::Y)) == P("b3 b1"));
    CHECK(theta_Y(L(Alphabet::Y, 2)) == L(Alphabet::B, 2));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto ws = words_of_weight(Alphabet::Y, 1 + int(rng() % 4));
        NCPoly u = NCPoly::word(Alphabet::Y, ws[rng() % ws.size()]);
        NCPoly v = NCPoly::word(Alphabet::Y, ws[rng() % ws.size()]);
        REQUIRE(theta_Y(u * v) == theta_Y(v) * theta_Y(u));
    }
}

TEST_CASE("theta on the weight-3 generator") {
    NCPoly t = theta(adx0(2));
    CHECK(t == adb0(2) + L(Alphabet::B, 3));
    NCPoly p0 = proj_pi0(t);
    CHECK(p0 == P("b0 b0 b1 + b3"));
    CHECK(tau(p0) == p0);
}

TEST_CASE("split-off maps on the weight-1 letters") {
    CHECK(theta_10(L(Alphabet::X, 0)) == L(Alphabet::B, 0));
    CHECK(theta_1(L(Alphabet::X, 1)) == L(Alphabet::B, 1));
    CHECK(theta_10(L(Alphabet::X, 1)) == L(Alphabet::B, 1));
    NCPoly mix = adx0(2) + 3 * L(Alphabet::X, 1) + Rat(1, 2) * L(Alphabet::X, 0);
    CHECK(theta_10(mix) ==
          theta(adx0(2)) + 3 * L(Alphabet::B, 1) + Rat(1, 2) * L(Alphabet::B, 0));
}

TEST_CASE("theta is injective on the relation-space bases, weight <= 7") {
    for (int m = 1; m <= 7; ++m)
        for (int n = 0; n <= m; ++n) {
            auto basis = ls_basis(m, n);
            if (basis.dim() == 0) continue;
            std::vector<NCPoly> images;
            for (auto& e : basis.elems) images.push_back(theta(e));
            auto words = support_words(images);
            REQUIRE(coord_matrix(images, words).rank() == basis.dim());
        }
}

TEST_CASE("theta is a Lie morphism on the relation space, total weight <= 8") {
    auto elems = ls_elems(5);
    for (auto& a : elems)
        for (auto& b : elems) {
            if (a.weight() + b.weight() > 8) continue;
            REQUIRE(theta(ihara_unchecked(a, b)) ==
                    ari_unchecked(theta(a), theta(b)));
        }
}

TEST_CASE("the pi0 part of a theta image is tau-invariant, weight <= 8") {
    for (auto& psi : ls_elems(8)) {
        NCPoly p0 = proj_pi0(theta(psi));
        REQUIRE(tau(p0) == p0);
    }
}

TEST_CASE("every word of theta_Y(pi_Y psi) has a letter of index > 1") {
    for (auto& psi : ls_elems(8)) {
        NCPoly ty = theta_Y(proj_piY(psi));
        for (auto& [w, c] : ty.terms()) {
            bool has_big = false;
            for (char ch : w)
                if (static_cast<unsigned char>(ch) > 1) has_big = true;
            REQUIRE(has_big);
        }
    }
}

TEST_CASE("theta images commute with b1, weight <= 7") {
    for (auto& psi : ls_elems(7))
        REQUIRE(ari_unchecked(theta(psi), L(Alphabet::B, 1)).is_zero());
}
