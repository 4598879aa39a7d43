#include "rehyp/rarefied_gamma.hpp"

#include <cmath>

namespace rehyp {

EvalResult gamma_r(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy) {
    const double m = pt.m();
    const double r = static_cast<double>(bp.r);
    Nome pr(bp.p_r()), qr(bp.q_r()), pq(bp.pq());
    EvalResult g1 = ell_gamma(exp2pii(pt.u + bp.tau * m), pr, pq, policy);
    EvalResult g2 = ell_gamma(exp2pii(pt.u + bp.sigma * (r - m)), qr, pq, policy);
    return g1 * g2;
}

EvalResult gamma_r_product_form(const RGPoint& pt, const BaseParams& bp,
                                TruncationPolicy policy) {
    if (pt.two_m % 2 != 0)
        throw std::domain_error("gamma_r_product_form: integer m required");
    long m = pt.two_m / 2;
    if (m < 0 || m > bp.r)
        throw std::domain_error("gamma_r_product_form: need 0 <= m <= r");
    Nome pr(bp.p_r()), qr(bp.q_r());
    const double md = static_cast<double>(m);
    const double r = static_cast<double>(bp.r);
    EvalResult out{cplx{1.0, 0.0}, 0.0};
    for (long k = 0; k < m; ++k)
        out *= ell_gamma(exp2pii(pt.u + bp.sigma * (r - md) + (bp.tau + bp.sigma) * static_cast<double>(k)),
                         pr, qr, policy);
    for (long k = 0; k < bp.r - m; ++k)
        out *= ell_gamma(exp2pii(pt.u + bp.tau * md + (bp.tau + bp.sigma) * static_cast<double>(k)),
                         pr, qr, policy);
    return out;
}

cplx gamma_r_norm_prefactor(const RGPoint& pt, const BaseParams& bp) {
    const long tm = pt.two_m;
    // exponents (exact rationals of doubled integers):
    //   m(m-1)/2       = tm(tm-2)/8
    //   m(m-1)(m-2)/6  = tm(tm-2)(tm-4)/48
    //  -m(m-1)(m+1)/6  = -tm(tm-2)(tm+2)/48
    const double ez = static_cast<double>(tm * (tm - 2)) / 8.0;
    const double ep = static_cast<double>(tm * (tm - 2) * (tm - 4)) / 48.0;
    const double eq = -static_cast<double>(tm * (tm - 2) * (tm + 2)) / 48.0;
    cplx log_minus_z = std::log(-exp2pii(pt.u));  // principal branch, cut on (-z) < 0
    return std::exp(ez * log_minus_z + 2.0 * pi * iu * (ep * bp.tau + eq * bp.sigma));
}

EvalResult gamma_r_norm(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy) {
    return gamma_r_norm_prefactor(pt, bp) * gamma_r(pt, bp, policy);
}

cplx gamma_periodic_prefactor(const RGPoint& pt, const BaseParams& bp) {
    const long tm = pt.two_m;
    const long r = bp.r;
    // m(m-r)/2r = tm(tm-2r)/(8r)
    const double q1 = static_cast<double>(tm * (tm - 2 * r)) / (8.0 * static_cast<double>(r));
    // (2m-r)/3 = (tm - r)/3
    const double q2 = static_cast<double>(tm - r) / 3.0;
    cplx inner = 2.0 * pt.u - bp.tau - bp.sigma + q2 * (bp.tau - bp.sigma - 1.0);
    return std::exp(pi * iu * q1 * inner);
}

EvalResult gamma_periodic(const RGPoint& pt, const BaseParams& bp, TruncationPolicy policy) {
    return gamma_periodic_prefactor(pt, bp) * gamma_r(pt, bp, policy);
}

EvalResult residue_limit(const BaseParams& bp, TruncationPolicy policy) {
    EvalResult a = q_pochhammer(bp.p_r(), Nome(bp.p_r()), policy);
    EvalResult b = q_pochhammer(bp.q_r(), Nome(bp.q_r()), policy);
    EvalResult prod = a * b;
    return {1.0 / prod.value, prod.err};
}

EvalResult kappa_r(const BaseParams& bp, TruncationPolicy policy) {
    EvalResult a = q_pochhammer(bp.p_r(), Nome(bp.p_r()), policy);
    EvalResult b = q_pochhammer(bp.q_r(), Nome(bp.q_r()), policy);
    return 0.5 * (a * b);
}

}  // namespace rehyp
