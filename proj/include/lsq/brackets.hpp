#pragma once

#include "lsq/derivations.hpp"

namespace lsq {

// Ihara bracket on Lie(X): d_a(b) - d_b(a) + [a, b].
NCPoly ihara(const NCPoly& a, const NCPoly& b);        // validates Lie inputs
NCPoly ihara_unchecked(const NCPoly& a, const NCPoly& b);

// The bracket {-,-}_A on Lie(B): partial_a(b) - partial_b(a) + [a, b].
NCPoly ari(const NCPoly& a, const NCPoly& b);          // validates Lie inputs
NCPoly ari_unchecked(const NCPoly& a, const NCPoly& b);

struct AxiomFailure {
    std::string axiom;
    std::vector<std::string> witness;
};

enum class BracketKind { IharaX, AriB };

// Post-Lie axioms for psi |> phi = d_psi(phi) resp. partial_psi(phi):
//  (i)  psi |> [phi, lam] = [psi |> phi, lam] + [phi, psi |> lam]
//  (ii) <psi,phi> |> lam = psi |> (phi |> lam) - phi |> (psi |> lam),
//       where <psi,phi> = psi |> phi - phi |> psi + [psi, phi].
std::vector<AxiomFailure> post_lie_check(BracketKind kind,
                                         const std::vector<NCPoly>& samples);

// Jacobi identity for the induced bracket on the sample set.
std::vector<AxiomFailure> jacobi_check(BracketKind kind,
                                       const std::vector<NCPoly>& samples);

} // namespace lsq
