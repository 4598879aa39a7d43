#pragma once

// Base-layer special functions: q-Pochhammer symbol, Jacobi theta functions
// and the elliptic gamma functions of first and second order, all as
// truncated products with controlled tails.

#include "rehyp/types.hpp"

namespace rehyp {

// A base parameter with |value| < 1.  Constructors reject |value| >= 1 - 1e-12.
struct Nome {
    cplx value;
    explicit Nome(cplx v);
};

// (z;p)_inf = prod_{j>=0} (1 - z p^j)
EvalResult q_pochhammer(cplx z, Nome p, TruncationPolicy policy = {});

// theta(z;p) = (z;p)_inf (p/z;p)_inf, z != 0
EvalResult theta(cplx z, Nome p, TruncationPolicy policy = {});

// Odd Jacobi theta function from its Fourier series,
//   theta1(u|tau) = -sum_{k in Z} e^{pi i tau (k+1/2)^2} e^{2 pi i (k+1/2)(u+1/2)},
// Im(tau) > 0.
EvalResult theta1(cplx u, cplx tau, TruncationPolicy policy = {});

// Gamma(z;p,q) = prod_{j,k>=0} (1 - p^{j+1}q^{k+1}/z) / (1 - z p^j q^k)
EvalResult ell_gamma(cplx z, Nome p, Nome q, TruncationPolicy policy = {});

// Second-order gamma:
// Gamma(z;p,q,t) = prod_{j,k,l>=0} (1 - z p^j q^k t^l)(1 - p^{j+1}q^{k+1}t^{l+1}/z),
// symmetric in all three bases.
EvalResult ell_gamma2(cplx z, Nome p, Nome q, Nome t, TruncationPolicy policy = {});

// Relative distance below which a product factor counts as sitting on a pole.
inline constexpr double pole_proximity_tol = 1e-10;

}  // namespace rehyp
