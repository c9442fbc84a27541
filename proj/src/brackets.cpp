#include "lsq/brackets.hpp"

namespace lsq {

namespace {

void require_lie(const NCPoly& p, const char* who) {
    if (!is_primitive(p))
        throw std::invalid_argument(std::string(who) + ": argument is not a Lie element");
}

NCPoly triangle(BracketKind kind, const NCPoly& a, const NCPoly& b) {
    return kind == BracketKind::IharaX ? d(a, b) : partial(a, b);
}

NCPoly induced_bracket(BracketKind kind, const NCPoly& a, const NCPoly& b) {
    return triangle(kind, a, b) - triangle(kind, b, a) + commutator(a, b);
}

} // namespace

NCPoly ihara_unchecked(const NCPoly& a, const NCPoly& b) {
    return induced_bracket(BracketKind::IharaX, a, b);
}

NCPoly ihara(const NCPoly& a, const NCPoly& b) {
    require_lie(a, "ihara");
    require_lie(b, "ihara");
    return ihara_unchecked(a, b);
}

NCPoly ari_unchecked(const NCPoly& a, const NCPoly& b) {
    return induced_bracket(BracketKind::AriB, a, b);
}

NCPoly ari(const NCPoly& a, const NCPoly& b) {
    require_lie(a, "ari");
    require_lie(b, "ari");
    return ari_unchecked(a, b);
}

std::vector<AxiomFailure> post_lie_check(BracketKind kind, const std::vector<NCPoly>& samples) {
    std::vector<AxiomFailure> fails;
    for (auto& psi : samples)
        for (auto& phi : samples)
            for (auto& lam : samples) {
                NCPoly lhs1 = triangle(kind, psi, commutator(phi, lam));
                NCPoly rhs1 = commutator(triangle(kind, psi, phi), lam) +
                              commutator(phi, triangle(kind, psi, lam));
                if (!(lhs1 == rhs1))
                    fails.push_back({"derivation of [-,-]",
                                     {psi.to_string(), phi.to_string(), lam.to_string()}});
                NCPoly lhs2 = triangle(kind, induced_bracket(kind, psi, phi), lam);
                NCPoly rhs2 = triangle(kind, psi, triangle(kind, phi, lam)) -
                              triangle(kind, phi, triangle(kind, psi, lam));
                if (!(lhs2 == rhs2))
                    fails.push_back({"compatibility of <-,-> with |>",
                                     {psi.to_string(), phi.to_string(), lam.to_string()}});
            }
    return fails;
}

std::vector<AxiomFailure> jacobi_check(BracketKind kind, const std::vector<NCPoly>& samples) {
    std::vector<AxiomFailure> fails;
    for (auto& a : samples)
        for (auto& b : samples)
            for (auto& c : samples) {
                NCPoly j = induced_bracket(kind, induced_bracket(kind, a, b), c) +
                           induced_bracket(kind, induced_bracket(kind, b, c), a) +
                           induced_bracket(kind, induced_bracket(kind, c, a), b);
                if (!j.is_zero())
                    fails.push_back({"jacobi", {a.to_string(), b.to_string(), c.to_string()}});
            }
    return fails;
}

} // namespace lsq
