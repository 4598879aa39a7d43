#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rehyp {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx iu{0.0, 1.0};

// e^{2*pi*i*x}; the additive-to-multiplicative bridge used everywhere.
inline cplx exp2pii(cplx x) { return std::exp(2.0 * pi * iu * x); }

// Series / product truncation control.  `tol` is an absolute cutoff on the
// log-term magnitude, `max_terms` caps the work per product dimension.
struct TruncationPolicy {
    double tol = 1e-16;
    long max_terms = 1000000;
};

// Value plus a relative error estimate.  Consumers combine estimates by
// taking the max (quadrature) or the sum (short products); both are
// provided.
struct EvalResult {
    cplx value{};
    double err = 0.0;

    EvalResult() = default;
    EvalResult(cplx v, double e) : value(v), err(e) {}

    EvalResult operator*(const EvalResult& o) const {
        return {value * o.value, err + o.err};
    }
    EvalResult operator/(const EvalResult& o) const {
        return {value / o.value, err + o.err};
    }
    EvalResult& operator*=(const EvalResult& o) {
        value *= o.value;
        err += o.err;
        return *this;
    }
};

inline EvalResult operator*(cplx a, const EvalResult& b) { return {a * b.value, b.err}; }

// ---------------------------------------------------------------------------
// Error types

class truncation_error : public std::runtime_error {
  public:
    truncation_error(const std::string& what, cplx partial_value)
        : std::runtime_error(what), partial(partial_value) {}
    cplx partial;
};

class pole_error : public std::runtime_error {
  public:
    pole_error(const std::string& what, long jj, long kk)
        : std::runtime_error(what), j(jj), k(kk) {}
    long j, k;
};

class node_singularity_error : public std::runtime_error {
  public:
    node_singularity_error(const std::string& what, cplx where, long two_m_at)
        : std::runtime_error(what), location(where), two_m(two_m_at) {}
    cplx location;
    long two_m;
};

class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, std::vector<double> hist)
        : std::runtime_error(what), history(std::move(hist)) {}
    std::vector<double> history;
};

class contour_pinch_error : public std::runtime_error {
  public:
    contour_pinch_error(const std::string& what, double m)
        : std::runtime_error(what), margin(m) {}
    double margin;
};

class parity_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class balancing_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class resource_limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class unsupported_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Doubled-integer helpers.  Discrete indices m in Z + mu, mu in {0, 1/2},
// are stored as 2m so that half-integers stay exact.

inline double half(long two_m) { return 0.5 * static_cast<double>(two_m); }

// parity p(m) = (-1)^{2 mu}
inline int parity_sign(long two_m) { return (two_m & 1L) ? -1 : +1; }

inline int parity_class(long two_m) { return static_cast<int>(((two_m % 2) + 2) % 2); }

// label reflection m -> r - m used by the symmetric subspace; in doubled
// units, with 0 mapping to itself.
inline long reflect_two_m(long two_m, int r) {
    long two_r = 2L * r;
    long red = ((two_m % two_r) + two_r) % two_r;
    return red == 0 ? 0 : two_r - red;
}

// exact rational m(m-1)/2 and friends, evaluated from doubled integers
inline double tri_half(long two_m) {  // m(m-1)/2
    return static_cast<double>(two_m * (two_m - 2)) / 8.0;
}

// ---------------------------------------------------------------------------
// Deterministic uniform double in [0,1) from a 64-bit generator; avoids
// libstdc++-version-dependent distributions.
template <class Gen>
double rnd01(Gen& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace rehyp
