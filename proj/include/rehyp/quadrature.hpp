#pragma once

// Sum-plus-integral engine: trapezoidal quadrature on circles combined with
// the exact finite sum over discrete labels in Z_r + mu, and the dense
// grid-operator representation of integral operators on spin functions.

#include <functional>
#include <vector>

#include "rehyp/types.hpp"

namespace rehyp {

// Nodes u_j = phase_offset + j/n_nodes + i*im_shift, i.e. z_j on the circle
// of the given radius; trapezoid weights 1/n_nodes each.  For a radius-rho
// contour the additive nodes carry Im(u) = -log(rho)/(2 pi).
struct CircleGrid {
    int n_nodes = 64;
    double radius = 1.0;
    double phase_offset = 0.0;

    CircleGrid() = default;
    CircleGrid(int n, double rad = 1.0, double phase = 0.0)
        : n_nodes(n), radius(rad), phase_offset(phase) {
        if (n < 1 || (n & (n - 1)) != 0)
            throw std::domain_error("CircleGrid: n_nodes must be a power of two");
        if (rad <= 0.0) throw std::domain_error("CircleGrid: radius must be > 0");
    }

    double im_shift() const { return -std::log(radius) / (2.0 * pi); }
    cplx node_u(int j) const {
        return cplx(phase_offset + static_cast<double>(j) / n_nodes, im_shift());
    }
};

// Circle nodes times the label set {mu, 1+mu, ..., r-1+mu}.
struct SpinGrid {
    CircleGrid circle;
    int r = 1;
    int two_mu = 0;  // 0 or 1

    SpinGrid() = default;
    SpinGrid(CircleGrid c, int r_, int two_mu_) : circle(c), r(r_), two_mu(two_mu_) {
        if (r < 1) throw std::domain_error("SpinGrid: r >= 1");
        if (two_mu != 0 && two_mu != 1) throw std::domain_error("SpinGrid: two_mu in {0,1}");
    }

    int dim() const { return circle.n_nodes * r; }
    long label(int a) const { return two_mu + 2L * a; }  // doubled
    int label_index(long two_m) const {
        long red = ((two_m - two_mu) / 2) % r;
        return static_cast<int>((red + r) % r);
    }
    // layout: index = a * n_nodes + j
    int index(int j, int a) const { return a * circle.n_nodes + j; }
    cplx node_u(int idx) const { return circle.node_u(idx % circle.n_nodes); }
    long node_two_m(int idx) const { return label(idx / circle.n_nodes); }
    // reflected index for (u,m) -> (-u, r-m); exact on phase_offset == 0 grids
    int reflect_index(int idx) const {
        int n = circle.n_nodes;
        int j = idx % n, a = idx / n;
        int jr = (n - j) % n;
        int ar = label_index(reflect_two_m(label(a), r));
        return index(jr, ar);
    }
};

using SpinKernel = std::function<cplx(cplx /*u*/, long /*two_m*/)>;
using SpinKernel2 =
    std::function<cplx(cplx /*u_out*/, long /*two_k*/, cplx /*u_in*/, long /*two_m*/)>;

// Values of a spin function on (nodes x labels)^arity.
struct GridFunction {
    SpinGrid grid;
    int arity = 1;
    std::vector<cplx> values;

    GridFunction() = default;
    GridFunction(SpinGrid g, int k = 1) : grid(g), arity(k) {
        std::size_t n = 1;
        for (int i = 0; i < k; ++i) n *= static_cast<std::size_t>(g.dim());
        values.assign(n, cplx{});
    }
    static GridFunction sample(const SpinGrid& g, const SpinKernel& f);
    double norm() const;
};

struct QuadResult {
    cplx value{};
    double err = 0.0;  // relative estimate
    int n_nodes = 0;
    std::vector<double> history;  // successive relative changes under doubling
};

// trapezoid over the circle x exact sum over labels; the error estimate is a
// Richardson comparison against the n/2 sub-grid
QuadResult integrate_sum(const SpinKernel& kernel, const SpinGrid& grid);

// doubles n_nodes from n_start until the relative change < rel_tol or n_max
// is exceeded; throws convergence_error (with history) on failure
QuadResult refine_until(const SpinKernel& kernel, const SpinGrid& proto, double rel_tol,
                        int n_max = 4096, int n_start = 32);

// Dense linear map between spin grids with the input quadrature weight 1/n
// folded into the matrix columns: (Af)(out) = sum_m (1/n) sum_j K(out; u_j, m) f_j.
struct GridOperator {
    SpinGrid out, in;
    std::vector<cplx> a;  // row-major dim_out x dim_in

    GridOperator() = default;
    GridOperator(SpinGrid o, SpinGrid i)
        : out(o), in(i), a(static_cast<std::size_t>(o.dim()) * i.dim(), cplx{}) {}

    cplx& at(int row, int col) { return a[static_cast<std::size_t>(row) * in.dim() + col]; }
    cplx at(int row, int col) const {
        return a[static_cast<std::size_t>(row) * in.dim() + col];
    }

    GridFunction apply(const GridFunction& f) const;
    GridOperator compose(const GridOperator& rhs) const;  // (*this) o rhs
    static GridOperator identity(const SpinGrid& g);
    // exact projector onto f(u,m) = f(-u, r-m)
    static GridOperator symmetrizer(const SpinGrid& g);
    // diagonal multiplication operator
    static GridOperator diagonal(const SpinGrid& g, const SpinKernel& d);

    GridOperator operator-(const GridOperator& rhs) const;
    double frobenius() const;
};

GridOperator build_operator(const SpinKernel2& kernel2, const SpinGrid& out_grid,
                            const SpinGrid& in_grid);

// Folded label sum for kernels with c_m = c_{(r-m) mod r} (mu=0) or the
// mu=1/2 analogue; equals the plain sum whenever the symmetry holds.
// `values` are listed in label order (m = mu, 1+mu, ..., r-1+mu).
cplx reduce_symmetric_sum(const std::vector<cplx>& values, int r, int two_mu,
                          bool verify = false);

// min over poles of ||pole| - radius| / radius; poles outside
// [radius/50, 50*radius] are ignored
double pole_margin(const std::vector<cplx>& poles, const CircleGrid& contour);

inline constexpr double default_pole_margin_delta = 1e-3;

// compares kernel(u) against kernel(u+1) at 8 sample points; false when the
// integrand is not invariant under u -> u+1 and circle quadrature would be
// silently wrong
bool periodicity_probe(const SpinKernel& kernel, const SpinGrid& grid, double tol = 1e-8);

}  // namespace rehyp
