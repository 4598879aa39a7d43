#pragma once

// The rarefied elliptic gamma function gamma^{(r)}(z,m;p,q) and its two
// normalizations (quasiperiodic-normalized and r-periodic), together with
// the residue constant of its z=1 pole.
//
// Inputs are additive-first: the half periods tau, sigma (Im > 0) and the
// additive argument u are primary, with p = e^{2 pi i tau}, q = e^{2 pi i sigma},
// z = e^{2 pi i u} derived.  Discrete indices m in Z + mu, mu in {0,1/2}, are
// stored doubled (two_m = 2m) so half-integers stay exact; prefactor
// exponents are formed from exact integer products before any division.

#include "rehyp/core_special.hpp"
#include "rehyp/types.hpp"

namespace rehyp {

struct BaseParams {
    int r;
    cplx tau;    // p = e^{2 pi i tau}, Im(tau) > 0
    cplx sigma;  // q = e^{2 pi i sigma}, Im(sigma) > 0

    BaseParams(int r_, cplx tau_, cplx sigma_) : r(r_), tau(tau_), sigma(sigma_) {
        if (r < 1) throw std::domain_error("BaseParams: r must be >= 1");
        if (tau.imag() <= 0.0 || sigma.imag() <= 0.0)
            throw std::domain_error("BaseParams: Im(tau), Im(sigma) must be > 0");
    }

    cplx p() const { return exp2pii(tau); }
    cplx q() const { return exp2pii(sigma); }
    cplx pq() const { return exp2pii(tau + sigma); }
    cplx p_r() const { return exp2pii(tau * static_cast<double>(r)); }
    cplx q_r() const { return exp2pii(sigma * static_cast<double>(r)); }

    // magnitude/phase constructor: |p| = mag_p in (0,1), arg p = 2 pi phase_p
    static BaseParams from_nomes(int r, double mag_p, double phase_p, double mag_q,
                                 double phase_q) {
        return BaseParams(r, cplx(phase_p, -std::log(mag_p) / (2.0 * pi)),
                          cplx(phase_q, -std::log(mag_q) / (2.0 * pi)));
    }
};

struct RGPoint {
    cplx u;      // additive argument, z = e^{2 pi i u}
    long two_m;  // doubled discrete index

    double m() const { return half(two_m); }
    cplx z() const { return exp2pii(u); }

    // principal-branch additive representative of a multiplicative argument
    static RGPoint from_z(cplx z, long two_m) {
        return {std::log(z) / (2.0 * pi * iu), two_m};
    }
};

// gamma^{(r)}(z,m;p,q) = Gamma(z p^m; p^r, pq) Gamma(z q^{r-m}; q^r, pq)
EvalResult gamma_r(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy = {});

// the equivalent "rarefied product" form, valid for integer 0 <= m <= r:
//   prod_{k=0}^{m-1} Gamma(q^{r-m} z (pq)^k; p^r, q^r)
//   prod_{k=0}^{r-m-1} Gamma(p^m z (pq)^k; p^r, q^r)
EvalResult gamma_r_product_form(const RGPoint& pt, const BaseParams& bp,
                                TruncationPolicy policy = {});

// Gamma^{(r)}(z,m;p,q) =
//   (-z)^{m(m-1)/2} p^{m(m-1)(m-2)/6} q^{-m(m-1)(m+1)/6} gamma^{(r)}(z,m;p,q)
// with the principal branch of log(-z).
EvalResult gamma_r_norm(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy = {});

// r-periodic normalization
//   Gamma(u,m;tau,sigma) = e^{pi i (m(m-r)/2r)(2u - tau - sigma + (1/3)(2m-r)(tau-sigma-1))}
//                          gamma^{(r)}(e^{2 pi i u}, m; p, q),
// satisfying Gamma(u, m+r) = Gamma(u, m).
EvalResult gamma_periodic(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy = {});

// the exponential prefactors themselves (used by cross-normalization checks)
cplx gamma_r_norm_prefactor(const RGPoint& pt, const BaseParams& bp);
cplx gamma_periodic_prefactor(const RGPoint& pt, const BaseParams& bp);

// lim_{z->1} (1-z) gamma^{(r)}(z,0;p,q) = 1 / ((p^r;p^r)_inf (q^r;q^r)_inf)
EvalResult residue_limit(const BaseParams& bp, TruncationPolicy policy = {});

// kappa^{(r)} = (1/2) (p^r;p^r)_inf (q^r;q^r)_inf, the measure constant of the
// sum-plus-integral transforms
EvalResult kappa_r(const BaseParams& bp, TruncationPolicy policy = {});

}  // namespace rehyp
