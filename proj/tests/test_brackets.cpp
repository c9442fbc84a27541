#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsq/brackets.hpp"
#include "lsq/freelie.hpp"
#include "lsq/theta.hpp"

using namespace lsq;

namespace {

NCPoly L(Alphabet a, unsigned i) { return NCPoly::letter(a, i); }

std::vector<NCPoly> lie_elems(Alphabet a, int max_weight) {
    std::vector<NCPoly> out;
    for (int m = 1; m <= max_weight; ++m)
        for (int n = 0; n <= m; ++n)
            for (auto& e : lie_basis(a, m, n).elems) out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("x0 and x1 are central for the Ihara bracket") {
    for (auto& psi : lie_elems(Alphabet::X, 5)) {
        CHECK(ihara(psi, L(Alphabet::X, 0)).is_zero());
        CHECK(ihara(psi, L(Alphabet::X, 1)).is_zero());
    }
}

TEST_CASE("Ihara bracket agrees with the action-commutator oracle") {
    auto elems = lie_elems(Alphabet::X, 4);
    for (auto& a : elems)
        for (auto& b : elems) {
            if (a.weight() + b.weight() > 7) continue;
            NCPoly oracle = s(a, s(b, NCPoly::one(Alphabet::X))) -
                            s(b, s(a, NCPoly::one(Alphabet::X)));
            REQUIRE(ihara(a, b) == oracle);
        }
    NCPoly c1 = commutator(L(Alphabet::X, 0), L(Alphabet::X, 1));
    NCPoly c2 = commutator(L(Alphabet::X, 0), c1);
    NCPoly oracle = s(c1, s(c2, NCPoly::one(Alphabet::X))) -
                    s(c2, s(c1, NCPoly::one(Alphabet::X)));
    CHECK(ihara(c1, c2) == oracle);
}

TEST_CASE("b0 is central for the balanced bracket") {
    for (auto& phi : lie_elems(Alphabet::B, 4)) CHECK(ari(phi, L(Alphabet::B, 0)).is_zero());
}

TEST_CASE("balanced bracket on small letters") {
    NCPoly b1 = L(Alphabet::B, 1), b2 = L(Alphabet::B, 2);
    CHECK(ari(b1, b2) == -2 * commutator(b1, b2));
    CHECK(ari(b1, b2) == partial(b1, b2) - partial(b2, b1) + commutator(b1, b2));
}

TEST_CASE("restriction to Lie(b0, b1) is the Ihara bracket under relabeling") {
    auto elems = lie_elems(Alphabet::X, 5);
    for (auto& a : elems)
        for (auto& b : elems) {
            if (a.weight() + b.weight() > 7) continue;
            REQUIRE(ari_unchecked(theta_X(a), theta_X(b)) == theta_X(ihara_unchecked(a, b)));
        }
}

TEST_CASE("antisymmetry and closure") {
    auto ex = lie_elems(Alphabet::X, 4);
    for (auto& a : ex)
        for (auto& b : ex) {
            if (a.weight() + b.weight() > 6) continue;
            NCPoly br = ihara(a, b);
            REQUIRE(br == -ihara(b, a));
            REQUIRE((br.is_zero() || is_lie(br)));
        }
    auto eb = lie_elems(Alphabet::B, 3);
    for (auto& a : eb)
        for (auto& b : eb) {
            if (a.weight() + b.weight() > 5) continue;
            NCPoly br = ari(a, b);
            REQUIRE(br == -ari(b, a));
            REQUIRE((br.is_zero() || is_lie(br)));
        }
}

TEST_CASE("bracket inputs are validated") {
    CHECK_THROWS_AS(ihara(parse_poly("x0 x1"), L(Alphabet::X, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ari(parse_poly("b1 b2", Alphabet::B), L(Alphabet::B, 0)),
                    std::invalid_argument);
}

TEST_CASE("derivation compatibility with the brackets") {
    auto eb = lie_elems(Alphabet::B, 3);
    for (auto& a : eb)
        for (auto& b : eb) {
            if (a.weight() + b.weight() > 5) continue;
            NCPoly br = ari_unchecked(a, b);
            for (unsigned i = 0; i <= 4; ++i) {
                NCPoly lhs = partial(br, L(Alphabet::B, i));
                NCPoly rhs = partial(a, partial(b, L(Alphabet::B, i))) -
                             partial(b, partial(a, L(Alphabet::B, i)));
                REQUIRE(lhs == rhs);
            }
        }
    auto ex = lie_elems(Alphabet::X, 4);
    for (auto& a : ex)
        for (auto& b : ex) {
            if (a.weight() + b.weight() > 6) continue;
            NCPoly br = ihara_unchecked(a, b);
            for (unsigned i = 0; i <= 1; ++i) {
                NCPoly lhs = d(br, L(Alphabet::X, i));
                NCPoly rhs =
                    d(a, d(b, L(Alphabet::X, i))) - d(b, d(a, L(Alphabet::X, i)));
                REQUIRE(lhs == rhs);
            }
        }
}

TEST_CASE("post-Lie and Jacobi on small sample sets") {
    std::vector<NCPoly> degenerate = {L(Alphabet::X, 0), L(Alphabet::X, 0), L(Alphabet::X, 0)};
    CHECK(post_lie_check(BracketKind::IharaX, degenerate).empty());
    CHECK(jacobi_check(BracketKind::IharaX, degenerate).empty());

    auto ex = lie_elems(Alphabet::X, 3);
    CHECK(post_lie_check(BracketKind::IharaX, ex).empty());
    CHECK(jacobi_check(BracketKind::IharaX, ex).empty());

    auto eb = lie_elems(Alphabet::B, 2);
    CHECK(post_lie_check(BracketKind::AriB, eb).empty());
    CHECK(jacobi_check(BracketKind::AriB, eb).empty());
}
