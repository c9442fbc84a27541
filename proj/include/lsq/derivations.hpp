#pragma once

#include "lsq/wordmaps.hpp"

namespace lsq {

// d_psi: the derivation of Q<X> with d(x0) = 0, d(x1) = [x1, psi].
NCPoly d(const NCPoly& psi, const NCPoly& p);
// s_psi = l_psi + d_psi (left multiplication plus the derivation).
NCPoly s(const NCPoly& psi, const NCPoly& p);
// s^Y_psi(u) = pi_Y(s_psi(i_Y(u))), the induced endomorphism of Q<Y>.
NCPoly sY(const NCPoly& psi, const NCPoly& u);
// D^Y_f(u) = s^Y_f(u) - u * pi_Y(f), a derivation of Q<Y>.
NCPoly DfY(const NCPoly& f, const NCPoly& u);

// Decomposition f = sum_{i=0}^p i_Y(f_i) x0^i of a homogeneous f of weight p.
struct FDecomposition {
    int p = 0;
    std::vector<NCPoly> f;    // f_0..f_p, over Y
    std::vector<NCPoly> fbar; // (-1)^p R_Y(f_i)

    // f_{i,0} = f_i + fbar_i; f_{i,j} = f_i y_j + y_j fbar_i for j >= 1.
    NCPoly block(size_t i, unsigned j) const;
};
FDecomposition f_decomp(const NCPoly& f);

// partial_w: the derivation of Q<B> with partial(b0) = 0 and the
// binomial index-lowering formula on positive letters; linear in w.
NCPoly partial(const NCPoly& w, const NCPoly& p);
// One-sided variants with partial = partialR - partialL.
NCPoly partialR(const NCPoly& w, const NCPoly& p);
NCPoly partialL(const NCPoly& w, const NCPoly& p);

// sigma_psi = l_psi + partial_psi.
NCPoly sigma(const NCPoly& psi, const NCPoly& p);
// sigma^0_psi(u) = pi_0(sigma_psi(u)) on Q<B>^0.
NCPoly sigma0(const NCPoly& psi, const NCPoly& u);

// partial^0_w(u) = pi_0(partial_{sec(w)}(u)) on Q<B>^0, and the one-sided
// variants through the same projection.
NCPoly partial0(const NCPoly& w, const NCPoly& u);
NCPoly partialR0(const NCPoly& w, const NCPoly& u);
NCPoly partialL0(const NCPoly& w, const NCPoly& u);

} // namespace lsq
