#pragma once

#include "lsq/wordmaps.hpp"

namespace lsq {

// theta_X : Q<X> -> Q<B>, letterwise x_i -> b_i (algebra morphism).
NCPoly theta_X(const NCPoly& p);
// theta_Y : Q<Y> -> Q<B>, y_n -> b_n extended as an antimorphism.
NCPoly theta_Y(const NCPoly& p);
// theta(psi) = theta_X(psi) + theta_Y(pi_Y(psi)); a Lie morphism on ls.
NCPoly theta(const NCPoly& psi);

// theta^(1)(psi + l*x1) = theta(psi) + l*b1 and
// theta^(10)(psi + l1*x1 + l0*x0) = theta(psi) + l1*b1 + l0*b0,
// where psi is the component of the input with (psi|x0) = (psi|x1) = 0.
NCPoly theta_1(const NCPoly& p);
NCPoly theta_10(const NCPoly& p);

} // namespace lsq
