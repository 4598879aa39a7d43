#include "rehyp/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace rehyp {

GridFunction GridFunction::sample(const SpinGrid& g, const SpinKernel& f) {
    GridFunction out(g, 1);
    for (int idx = 0; idx < g.dim(); ++idx)
        out.values[idx] = f(g.node_u(idx), g.node_two_m(idx));
    return out;
}

double GridFunction::norm() const {
    double s = 0.0;
    for (const cplx& v : values) s += std::norm(v);
    return std::sqrt(s);
}

namespace {

cplx plain_sum(const SpinKernel& kernel, const SpinGrid& grid, int stride) {
    const int n = grid.circle.n_nodes;
    cplx total{};
    for (int a = 0; a < grid.r; ++a) {
        long two_m = grid.label(a);
        cplx row{};
        for (int j = 0; j < n; j += stride) {
            cplx v = kernel(grid.circle.node_u(j), two_m);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw node_singularity_error("integrate_sum: non-finite kernel value at node",
                                             grid.circle.node_u(j), two_m);
            row += v;
        }
        total += row;
    }
    return total * (static_cast<double>(stride) / n);
}

}  // namespace

QuadResult integrate_sum(const SpinKernel& kernel, const SpinGrid& grid) {
    QuadResult qr;
    qr.value = plain_sum(kernel, grid, 1);
    qr.n_nodes = grid.circle.n_nodes;
    if (grid.circle.n_nodes >= 2) {
        cplx coarse = plain_sum(kernel, grid, 2);
        double scale = std::max(std::abs(qr.value), 1e-300);
        qr.err = std::abs(qr.value - coarse) / scale;
        qr.history.push_back(qr.err);
    }
    return qr;
}

QuadResult refine_until(const SpinKernel& kernel, const SpinGrid& proto, double rel_tol,
                        int n_max, int n_start) {
    std::vector<double> history;
    cplx prev{};
    bool have_prev = false;
    for (int n = n_start; n <= n_max; n *= 2) {
        SpinGrid g(CircleGrid(n, proto.circle.radius, proto.circle.phase_offset), proto.r,
                   proto.two_mu);
        cplx cur = plain_sum(kernel, g, 1);
        if (have_prev) {
            double change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
            history.push_back(change);
            if (change < rel_tol) {
                QuadResult qr;
                qr.value = cur;
                qr.err = change;
                qr.n_nodes = n;
                qr.history = history;
                return qr;
            }
        }
        prev = cur;
        have_prev = true;
    }
    throw convergence_error("refine_until: tolerance not reached at n_max", history);
}

GridFunction GridOperator::apply(const GridFunction& f) const {
    if (f.arity != 1 || f.grid.dim() != in.dim())
        throw std::domain_error("GridOperator::apply: grid mismatch");
    GridFunction g(out, 1);
    const int ni = in.dim(), no = out.dim();
    for (int row = 0; row < no; ++row) {
        cplx s{};
        const cplx* arow = a.data() + static_cast<std::size_t>(row) * ni;
        for (int col = 0; col < ni; ++col) s += arow[col] * f.values[col];
        g.values[row] = s;
    }
    return g;
}

GridOperator GridOperator::compose(const GridOperator& rhs) const {
    if (in.dim() != rhs.out.dim())
        throw std::domain_error("GridOperator::compose: dimension mismatch");
    GridOperator c(out, rhs.in);
    const int no = out.dim(), nm = in.dim(), ni = rhs.in.dim();
    for (int i = 0; i < no; ++i) {
        cplx* crow = c.a.data() + static_cast<std::size_t>(i) * ni;
        const cplx* arow = a.data() + static_cast<std::size_t>(i) * nm;
        for (int k = 0; k < nm; ++k) {
            cplx aik = arow[k];
            if (aik == cplx{}) continue;
            const cplx* brow = rhs.a.data() + static_cast<std::size_t>(k) * ni;
            for (int j = 0; j < ni; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

GridOperator GridOperator::identity(const SpinGrid& g) {
    GridOperator id(g, g);
    for (int i = 0; i < g.dim(); ++i) id.at(i, i) = 1.0;
    return id;
}

GridOperator GridOperator::symmetrizer(const SpinGrid& g) {
    GridOperator s(g, g);
    for (int i = 0; i < g.dim(); ++i) {
        s.at(i, i) += 0.5;
        s.at(i, g.reflect_index(i)) += 0.5;
    }
    return s;
}

GridOperator GridOperator::diagonal(const SpinGrid& g, const SpinKernel& d) {
    GridOperator m(g, g);
    for (int i = 0; i < g.dim(); ++i) m.at(i, i) = d(g.node_u(i), g.node_two_m(i));
    return m;
}

GridOperator GridOperator::operator-(const GridOperator& rhs) const {
    GridOperator d = *this;
    for (std::size_t i = 0; i < a.size(); ++i) d.a[i] -= rhs.a[i];
    return d;
}

double GridOperator::frobenius() const {
    double s = 0.0;
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

GridOperator build_operator(const SpinKernel2& kernel2, const SpinGrid& out_grid,
                            const SpinGrid& in_grid) {
    GridOperator op(out_grid, in_grid);
    const double w = 1.0 / in_grid.circle.n_nodes;
    for (int row = 0; row < out_grid.dim(); ++row) {
        cplx uo = out_grid.node_u(row);
        long ko = out_grid.node_two_m(row);
        for (int col = 0; col < in_grid.dim(); ++col) {
            cplx v = kernel2(uo, ko, in_grid.node_u(col), in_grid.node_two_m(col));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw node_singularity_error("build_operator: non-finite kernel at node pair",
                                             in_grid.node_u(col), in_grid.node_two_m(col));
            op.at(row, col) = w * v;
        }
    }
    return op;
}

cplx reduce_symmetric_sum(const std::vector<cplx>& c, int r, int two_mu, bool verify) {
    if (static_cast<int>(c.size()) != r)
        throw std::domain_error("reduce_symmetric_sum: need exactly r values");
    cplx folded{};
    if (two_mu == 0) {
        // symmetry c_m = c_{(r-m) mod r}
        if (r % 2 == 0) {
            folded = c[0] + c[r / 2];
            for (int m = 1; m < r / 2; ++m) folded += 2.0 * c[m];
        } else {
            folded = c[0];
            for (int m = 1; m <= (r - 1) / 2; ++m) folded += 2.0 * c[m];
        }
    } else {
        // labels m = j + 1/2, symmetry pairs j with r-1-j
        if (r % 2 == 0) {
            for (int j = 0; j < r / 2; ++j) folded += 2.0 * c[j];
        } else {
            folded = c[(r - 1) / 2];
            for (int j = 0; j <= (r - 3) / 2; ++j) folded += 2.0 * c[j];
        }
    }
    if (verify) {
        cplx plain{};
        for (const cplx& v : c) plain += v;
        double scale = std::max(std::abs(plain), 1e-300);
        if (std::abs(plain - folded) / scale > 1e-12)
            throw std::domain_error(
                "reduce_symmetric_sum: asserted label symmetry does not hold");
    }
    return folded;
}

double pole_margin(const std::vector<cplx>& poles, const CircleGrid& contour) {
    double best = std::numeric_limits<double>::infinity();
    const double rad = contour.radius;
    for (const cplx& p : poles) {
        double ap = std::abs(p);
        if (ap < rad / 50.0 || ap > rad * 50.0) continue;
        best = std::min(best, std::abs(ap - rad) / rad);
    }
    return best;
}

bool periodicity_probe(const SpinKernel& kernel, const SpinGrid& grid, double tol) {
    const double shift_im = grid.circle.im_shift();
    for (int s = 0; s < 8; ++s) {
        cplx u = cplx((s + 0.37) / 8.0, shift_im);
        long two_m = grid.label(s % grid.r);
        cplx v0 = kernel(u, two_m);
        cplx v1 = kernel(u + 1.0, two_m);
        double scale = std::max({std::abs(v0), std::abs(v1), 1e-300});
        if (std::abs(v0 - v1) / scale > tol) return false;
    }
    return true;
}

}  // namespace rehyp
