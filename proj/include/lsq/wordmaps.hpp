#pragma once

#include <functional>

#include "lsq/tensor.hpp"

namespace lsq {

// Extends letter images to a derivation of the word algebra by Leibniz.
NCPoly apply_letter_derivation(const NCPoly& p,
                               const std::function<NCPoly(unsigned)>& image);

// i_Y : Q<Y> -> Q<X>, y_n -> x0^{n-1} x1 (algebra morphism).
NCPoly embed_iY(const NCPoly& p);
// pi_Y : Q<X> -> Q<Y>, kills words ending in x0, respells the rest.
NCPoly proj_piY(const NCPoly& p);
// pi_0 : Q<B> -> Q<B>^0, kills words ending in b0.
NCPoly proj_pi0(const NCPoly& p);

bool in_B0(const NCPoly& p); // no word ends in b0
void require_B0(const NCPoly& p);

// gamma_0, the weight-lowering derivation of each algebra:
//   X: x0 -> 1, x1 -> 0;  Y: y_n -> (n-1) y_{n-1};  B: b0 -> 1, b_a -> 0.
NCPoly gamma0(const NCPoly& p);
// gamma_n, the derivation of Q<Y> with y_k -> delta_{k,n}.
NCPoly gamma_n(unsigned n, const NCPoly& p);

// sec : Q<Y> -> Q<X>, w -> sum_i (-1)^i/i! gamma_0^i(i_Y(w)) x0^i;
// a section of pi_Y with image in ker(gamma_0).
NCPoly sec_Y(const NCPoly& p);
// sec : Q<B>^0 -> Q<B>, the b0-run analogue; section of pi_0.
NCPoly sec_B(const NCPoly& p);

// The duality antiautomorphism of Q<B>^0: tau(b0^m b_k) = b0^{k-1} b_{m+1}.
NCPoly tau(const NCPoly& p);

// rho : Q<B>^0 -> Q<B>^0, the index-redistribution endomorphism; agrees with
// (-1)^{wt+dep} (S0 tau)^2. rho(1) = 1 by that identity (the summation
// formula is vacuous on the empty word).
NCPoly rho(const NCPoly& p);

// S0 = pi_0 . S . sec on Q<B>^0.
NCPoly S0(const NCPoly& p);

// Block structure of a B-word: b0^{m_1} b_{k_1} ... b0^{m_d} b_{k_d} b0^{m_{d+1}}.
struct BBlocks {
    std::vector<int> runs;         // m_1..m_d
    std::vector<unsigned> letters; // k_1..k_d, all >= 1
    int tail_run = 0;              // m_{d+1}

    size_t d() const { return letters.size(); }
    Key assemble() const;
};
BBlocks parse_b_word(const Key& w);

// w(l): replace the positive letter indices k_i by l_i.
Key word_subst_letters(const Key& w, const std::vector<unsigned>& l);
// w(n-bar): replace the b0-run lengths m_i by n_i (requires no trailing b0).
Key word_subst_runs(const Key& w, const std::vector<int>& n);

} // namespace lsq
