#include "lsq/theta.hpp"

namespace lsq {

NCPoly theta_X(const NCPoly& p) {
    if (p.alphabet() != Alphabet::X) throw std::invalid_argument("theta_X requires alphabet X");
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms()) r.add_term(w, c); // indices coincide
    return r;
}

NCPoly theta_Y(const NCPoly& p) {
    if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("theta_Y requires alphabet Y");
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms()) r.add_term(Key(w.rbegin(), w.rend()), c);
    return r;
}

NCPoly theta(const NCPoly& psi) {
    return theta_X(psi) + theta_Y(proj_piY(psi));
}

namespace {

NCPoly theta_split(const NCPoly& p, bool allow_x0) {
    if (p.alphabet() != Alphabet::X) throw std::invalid_argument("theta requires alphabet X");
    Rat l0 = p.coeff(Key(1, '\0'));
    Rat l1 = p.coeff(Key(1, '\1'));
    if (!allow_x0 && l0 != 0) throw std::invalid_argument("x0 component not allowed here");
    NCPoly psi = p;
    psi.add_term(Key(1, '\0'), -l0);
    psi.add_term(Key(1, '\1'), -l1);
    NCPoly r = theta(psi);
    r.add_term(Key(1, '\1'), l1);
    r.add_term(Key(1, '\0'), l0);
    return r;
}

} // namespace

NCPoly theta_1(const NCPoly& p) { return theta_split(p, false); }
NCPoly theta_10(const NCPoly& p) { return theta_split(p, true); }

} // namespace lsq
