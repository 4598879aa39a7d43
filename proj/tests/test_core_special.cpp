#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "rehyp/core_special.hpp"

using namespace rehyp;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// brute-force product oracle, independent of the truncation logic
cplx poch_oracle(cplx z, cplx p, int terms) {
    cplx out = 1.0, w = z;
    for (int j = 0; j < terms; ++j) {
        out *= (1.0 - w);
        w *= p;
    }
    return out;
}

// Laurent-series oracle: theta(z;p) = sum_k (-1)^k p^{k(k-1)/2} z^k / (p;p)_inf
cplx theta_series_oracle(cplx z, cplx p, int kmax) {
    cplx sum{};
    for (int k = -kmax; k <= kmax; ++k) {
        double e = 0.5 * static_cast<double>(k) * (k - 1);
        sum += std::pow(-1.0, k) * std::pow(p, e) * std::pow(z, k);
    }
    return sum / poch_oracle(p, p, 400);
}

}  // namespace

TEST_CASE("q_pochhammer basics") {
    Nome p(cplx(0.1, 0.0));
    CHECK(q_pochhammer(cplx(0.0, 0.0), p).value == cplx(1.0, 0.0));
    CHECK(std::abs(q_pochhammer(cplx(1.0, 0.0), p).value) == 0.0);

    // frozen from the 200-term direct product at z=0.5, p=0.1
    cplx ref = poch_oracle(0.5, 0.1, 200);
    CHECK(rel(q_pochhammer(cplx(0.5, 0.0), p).value, ref) < 1e-14);
    CHECK(rel(ref, cplx(0.47256496034654943, 0.0)) < 1e-14);
}

TEST_CASE("q_pochhammer rejects bad nomes and reports truncation failure") {
    CHECK_THROWS_AS(Nome(cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(Nome(cplx(0.7, 0.8)), std::domain_error);
    TruncationPolicy tight;
    tight.max_terms = 3;
    tight.tol = 1e-30;
    CHECK_THROWS_AS(q_pochhammer(cplx(0.5, 0.0), Nome(cplx(0.9, 0.0)), tight),
                    truncation_error);
}

TEST_CASE("q_pochhammer error estimate bounds a sharper evaluation") {
    Nome p(cplx(0.35, 0.1));
    cplx z(0.8, -0.3);
    TruncationPolicy loose;
    loose.tol = 1e-6;
    EvalResult coarse = q_pochhammer(z, p, loose);
    EvalResult fine = q_pochhammer(z, p);  // default 1e-16
    CHECK(rel(coarse.value, fine.value) <= coarse.err);
}

TEST_CASE("theta zero, symmetry and series oracle") {
    Nome p(cplx(0.15, 0.0));
    CHECK(std::abs(theta(cplx(1.0, 0.0), p).value) == 0.0);

    // theta(p z; p) = -z^{-1} theta(z; p)
    cplx z(0.3, 0.2);
    cplx lhs = theta(p.value * z, p).value;
    cplx rhs = -theta(z, p).value / z;
    CHECK(rel(lhs, rhs) < 1e-13);
    // theta(z^{-1};p) = -z^{-1} theta(z;p)
    CHECK(rel(theta(1.0 / z, p).value, rhs) < 1e-13);

    CHECK(rel(theta(cplx(2.0, 0.0), Nome(cplx(0.1, 0.0))).value,
              theta_series_oracle(2.0, 0.1, 60)) < 1e-13);
}

TEST_CASE("theta product form equals Laurent series on a grid") {
    std::mt19937_64 gen(0x5EED);
    Nome p(cplx(0.2, 0.05));
    for (int i = 0; i < 25; ++i) {
        double mag = 0.4 + 1.4 * rnd01(gen);
        double ph = rnd01(gen);
        cplx z = mag * exp2pii(cplx(ph, 0.0));
        CHECK(rel(theta(z, p).value, theta_series_oracle(z, p.value, 80)) < 1e-12);
    }
}

TEST_CASE("theta1 oddness and product relation") {
    cplx tau(0.0, 0.5);
    CHECK(std::abs(theta1(cplx(0.0, 0.0), tau).value) < 1e-15);

    cplx u(0.2, 0.1);
    CHECK(rel(theta1(-u, tau).value, -theta1(u, tau).value) < 1e-13);

    // theta1(u|tau) = i p^{1/8} e^{-pi i u} (p;p)_inf theta(e^{2 pi i u}; p)
    cplx u2(0.17, 0.0), tau2(0.0, 0.4);
    cplx p = exp2pii(tau2);
    cplx rhs = iu * std::exp(pi * iu * tau2 / 4.0) * std::exp(-pi * iu * u2) *
               q_pochhammer(p, Nome(p)).value * theta(exp2pii(u2), Nome(p)).value;
    CHECK(rel(theta1(u2, tau2).value, rhs) < 1e-13);

    CHECK_THROWS_AS(theta1(u, cplx(0.3, -0.1)), std::domain_error);
}

TEST_CASE("elliptic gamma reflection, shift, base symmetry") {
    Nome p(cplx(0.2, 0.0)), q(cplx(0.3, 0.0));
    cplx z(0.4, 0.0);
    cplx pq = p.value * q.value;
    CHECK(rel(ell_gamma(pq / z, p, q).value * ell_gamma(z, p, q).value, 1.0) < 1e-13);

    Nome p2(cplx(0.1, 0.0)), q2(cplx(0.2, 0.0));
    cplx z2(0.5, 0.0);
    cplx shift = ell_gamma(q2.value * z2, p2, q2).value / ell_gamma(z2, p2, q2).value;
    CHECK(rel(shift, theta(z2, p2).value) < 1e-13);
    cplx shift_p = ell_gamma(p2.value * z2, p2, q2).value / ell_gamma(z2, p2, q2).value;
    CHECK(rel(shift_p, theta(z2, q2).value) < 1e-13);

    cplx z3(0.6, 0.1);
    Nome p3(cplx(0.15, 0.0)), q3(cplx(0.25, 0.0));
    CHECK(rel(ell_gamma(z3, p3, q3).value, ell_gamma(z3, q3, p3).value) < 1e-14);
}

TEST_CASE("elliptic gamma pole proximity raises with the pole index") {
    Nome p(cplx(0.2, 0.0)), q(cplx(0.3, 0.0));
    try {
        ell_gamma(cplx(1.0 + 1e-12, 0.0), p, q);
        FAIL("expected pole_error");
    } catch (const pole_error& e) {
        CHECK(e.j == 0);
        CHECK(e.k == 0);
    }
}

TEST_CASE("second-order gamma relations") {
    Nome p(cplx(0.1, 0.0)), q(cplx(0.2, 0.0)), t(cplx(0.3, 0.0));
    cplx z(0.4, 0.0);
    // Gamma(q z; p,q,t) = Gamma(z; p,t) Gamma(z; p,q,t)
    cplx lhs = ell_gamma2(q.value * z, p, q, t).value;
    cplx rhs = ell_gamma(z, p, t).value * ell_gamma2(z, p, q, t).value;
    CHECK(rel(lhs, rhs) < 1e-13);

    // Gamma(pqt z; p,q,t) = Gamma(1/z; p,q,t)
    Nome b(cplx(0.2, 0.0));
    cplx z2(0.5, 0.0);
    cplx pqt = b.value * b.value * b.value;
    CHECK(rel(ell_gamma2(pqt * z2, b, b, b).value, ell_gamma2(1.0 / z2, b, b, b).value) <
          1e-13);

    // symmetric under base permutation
    cplx z3(0.3, 0.0);
    cplx v1 = ell_gamma2(z3, p, q, t).value;
    CHECK(rel(v1, ell_gamma2(z3, t, p, q).value) < 1e-14);
    CHECK(rel(v1, ell_gamma2(z3, q, t, p).value) < 1e-14);
}
