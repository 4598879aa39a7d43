#include "rehyp/core_special.hpp"

#include <cmath>

namespace rehyp {

namespace {

// Accumulates sum of log(1 - w) terms.  Near-zero factors short-circuit the
// whole product to zero, near-pole denominators are reported by the caller.
struct LogProduct {
    cplx logsum{};
    bool zero = false;
    long terms = 0;

    void mul_factor(cplx w) {
        cplx f = 1.0 - w;
        if (std::abs(f) == 0.0) {
            zero = true;
            return;
        }
        logsum += std::log(f);
        ++terms;
    }
    void div_factor(cplx w) {
        logsum -= std::log(1.0 - w);
        ++terms;
    }
    EvalResult finish(double tail_bound) const {
        if (zero) return {cplx{0.0, 0.0}, tail_bound};
        return {std::exp(logsum), tail_bound + static_cast<double>(terms) * 1e-16};
    }
};

}  // namespace

Nome::Nome(cplx v) : value(v) {
    if (std::abs(v) >= 1.0 - 1e-12)
        throw std::domain_error("Nome: |value| must be < 1 - 1e-12");
}

EvalResult q_pochhammer(cplx z, Nome p, TruncationPolicy policy) {
    if (z == cplx{0.0, 0.0}) return {cplx{1.0, 0.0}, 0.0};
    const double ap = std::abs(p.value);
    LogProduct acc;
    cplx w = z;
    for (long j = 0; j < policy.max_terms; ++j) {
        if (std::abs(w) < policy.tol) {
            // |tail| <= |w| / (1 - |p|)
            return acc.finish(std::abs(w) / (1.0 - ap));
        }
        acc.mul_factor(w);
        if (acc.zero) return acc.finish(0.0);
        w *= p.value;
    }
    throw truncation_error("q_pochhammer: max_terms exceeded before tolerance met",
                           acc.zero ? cplx{0.0, 0.0} : std::exp(acc.logsum));
}

EvalResult theta(cplx z, Nome p, TruncationPolicy policy) {
    if (z == cplx{0.0, 0.0}) throw std::domain_error("theta: z must be nonzero");
    EvalResult a = q_pochhammer(z, p, policy);
    EvalResult b = q_pochhammer(p.value / z, p, policy);
    return a * b;
}

EvalResult theta1(cplx u, cplx tau, TruncationPolicy policy) {
    if (tau.imag() <= 0.0) throw std::domain_error("theta1: Im(tau) must be > 0");
    cplx sum{};
    double scale = 0.0;
    long k = 0;
    for (; k < policy.max_terms; ++k) {
        // terms k and -k-1 share |k+1/2|
        double kh = static_cast<double>(k) + 0.5;
        cplx tp = std::exp(pi * iu * tau * kh * kh + 2.0 * pi * iu * kh * (u + 0.5));
        cplx tm = std::exp(pi * iu * tau * kh * kh - 2.0 * pi * iu * kh * (u + 0.5));
        sum += tp + tm;
        scale = std::max({scale, std::abs(sum), 1.0});
        if (std::abs(tp) < policy.tol * scale && std::abs(tm) < policy.tol * scale)
            break;
    }
    if (k >= policy.max_terms)
        throw truncation_error("theta1: max_terms exceeded", -sum);
    return {-sum, policy.tol + static_cast<double>(k) * 1e-16};
}

EvalResult ell_gamma(cplx z, Nome p, Nome q, TruncationPolicy policy) {
    if (z == cplx{0.0, 0.0}) throw std::domain_error("ell_gamma: z must be nonzero");
    const cplx zi = 1.0 / z;
    const double ap = std::abs(p.value), aq = std::abs(q.value);
    LogProduct acc;
    cplx pj = 1.0;  // p^j
    for (long j = 0; j < policy.max_terms; ++j, pj *= p.value) {
        cplx qk = 1.0;  // q^k
        bool any = false;
        for (long k = 0; k < policy.max_terms; ++k, qk *= q.value) {
            cplx wden = z * pj * qk;
            cplx wnum = zi * pj * p.value * qk * q.value;
            if (std::abs(wden) < policy.tol && std::abs(wnum) < policy.tol) break;
            any = true;
            if (std::abs(1.0 - wden) < pole_proximity_tol)
                throw pole_error("ell_gamma: argument within 1e-10 of pole lattice", j, k);
            acc.mul_factor(wnum);
            acc.div_factor(wden);
            if (acc.zero) return acc.finish(0.0);
        }
        if (!any) break;
    }
    double tail = policy.tol * 4.0 / ((1.0 - ap) * (1.0 - aq));
    return acc.finish(tail);
}

EvalResult ell_gamma2(cplx z, Nome p, Nome q, Nome t, TruncationPolicy policy) {
    if (z == cplx{0.0, 0.0}) throw std::domain_error("ell_gamma2: z must be nonzero");
    const cplx zi = 1.0 / z;
    const double ap = std::abs(p.value), aq = std::abs(q.value), at = std::abs(t.value);
    LogProduct acc;
    cplx pj = 1.0;
    for (long j = 0; j < policy.max_terms; ++j, pj *= p.value) {
        bool any_j = false;
        cplx qk = 1.0;
        for (long k = 0; k < policy.max_terms; ++k, qk *= q.value) {
            bool any_k = false;
            cplx tl = 1.0;
            for (long l = 0; l < policy.max_terms; ++l, tl *= t.value) {
                cplx w1 = z * pj * qk * tl;
                cplx w2 = zi * pj * p.value * qk * q.value * tl * t.value;
                if (std::abs(w1) < policy.tol && std::abs(w2) < policy.tol) break;
                any_k = true;
                acc.mul_factor(w1);
                if (acc.zero) return acc.finish(0.0);
                acc.mul_factor(w2);
                if (acc.zero) return acc.finish(0.0);
            }
            if (!any_k) break;
            any_j = true;
        }
        if (!any_j) break;
    }
    double tail = policy.tol * 8.0 / ((1.0 - ap) * (1.0 - aq) * (1.0 - at));
    return acc.finish(tail);
}

}  // namespace rehyp
