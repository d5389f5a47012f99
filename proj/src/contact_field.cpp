#include "hkit/contact_field.hpp"

#include <cmath>
#include <stdexcept>

#include "hkit/heisenberg.hpp"
#include "hkit/parallel.hpp"

namespace hkit {

CovectorField CovectorField::make(std::vector<double> lo,
                                  std::vector<double> hi,
                                  std::vector<int> shape, int dim,
                                  int degree) {
    if ((int)shape.size() != dim)
        throw std::invalid_argument("CovectorField: grid rank must equal dim");
    CovectorField f;
    f.dim = dim;
    f.degree = degree;
    f.basis = multi_index_basis(dim, degree);
    f.grid = GridMap::make(std::move(lo), std::move(hi), std::move(shape),
                           (int)f.basis.size());
    return f;
}

Covector CovectorField::at_node(long long idx) const {
    Covector c(dim, degree);
    for (size_t b = 0; b < basis.size(); ++b) {
        double v = grid.at(idx, (int)b);
        if (v != 0.0) c.set_coeff(basis[b], v);
    }
    return c;
}

void CovectorField::set_node(long long idx, const Covector& c) {
    if (c.ambient_dim() != dim || c.degree() != degree)
        throw std::invalid_argument("CovectorField: covector shape mismatch");
    for (size_t b = 0; b < basis.size(); ++b)
        grid.at(idx, (int)b) = c.coeff(basis[b]);
}

double CovectorField::sup_coeff_norm() const {
    double m = 0.0;
    for (double v : grid.data) m = std::max(m, std::abs(v));
    return m;
}

namespace {

/// d coefficient / d axis at a node, O(h^2) everywhere.
double fd_partial(const GridMap& g, std::vector<int> node, int comp,
                  int axis) {
    const int s = g.shape[axis];
    if (s < 3)
        throw std::invalid_argument("grid too coarse to differentiate");
    const double h = g.spacing(axis);
    const int i = node[axis];
    auto value_at = [&](int pos) {
        std::vector<int> n = node;
        n[axis] = pos;
        return g.at(g.index(n), comp);
    };
    if (i == 0)
        return (-3.0 * value_at(0) + 4.0 * value_at(1) - value_at(2)) /
               (2.0 * h);
    if (i == s - 1)
        return (3.0 * value_at(s - 1) - 4.0 * value_at(s - 2) +
                value_at(s - 3)) /
               (2.0 * h);
    return (value_at(i + 1) - value_at(i - 1)) / (2.0 * h);
}

} // namespace

CovectorField fd_exterior_derivative(const CovectorField& w) {
    CovectorField out = CovectorField::make(w.grid.lo, w.grid.hi, w.grid.shape,
                                            w.dim, w.degree + 1);
    parallel_for(0, w.grid.nodes(), [&](std::int64_t idx) {
        std::vector<int> node = w.grid.unindex(idx);
        Covector d(w.dim, w.degree + 1);
        for (size_t b = 0; b < w.basis.size(); ++b) {
            for (int axis = 1; axis <= w.dim; ++axis) {
                double part = fd_partial(w.grid, node, (int)b, axis - 1);
                if (part == 0.0) continue;
                MultiIndex merged;
                merged.push_back(axis);
                merged.insert(merged.end(), w.basis[b].begin(),
                              w.basis[b].end());
                MultiIndex sorted;
                int sign = sort_sign(merged, sorted);
                if (sign != 0) d.add_coeff(sorted, sign * part);
            }
        }
        out.set_node(idx, d);
    });
    return out;
}

namespace {

Covector d_alpha(int dim) {
    // d alpha = 4 sum dx_j ^ dy_j, constant coefficients
    const int n = dim / 2;
    Covector w(dim, 2);
    for (int j = 1; j <= n; ++j) w.set_coeff({2 * j - 1, 2 * j}, 4.0);
    return w;
}

Covector wedge_power(const Covector& w, int p) {
    Covector acc = Covector::scalar(w.ambient_dim(), 1.0);
    for (int i = 0; i < p; ++i) acc = wedge(acc, w);
    return acc;
}

HPoint node_point(const GridMap& g, const std::vector<int>& node) {
    std::vector<double> x = g.coord(node);
    double t = x.back();
    x.pop_back();
    return HPoint(std::move(x), t);
}

} // namespace

ContactFieldSplit contact_decompose_exact(const CovectorField& kappa) {
    const int dim = kappa.dim;
    if (dim % 2 != 1 || dim < 3)
        throw std::invalid_argument("contact field split needs dim = 2n+1");
    const int n = dim / 2;
    const int k = kappa.degree;
    if (k < n + 1 || k > 2 * n + 1)
        throw std::invalid_argument("contact field split needs n+1 <= k <= 2n+1");
    for (int s : kappa.grid.shape)
        if (s < 3)
            throw std::invalid_argument("grid too coarse to differentiate");

    CovectorField beta = CovectorField::make(kappa.grid.lo, kappa.grid.hi,
                                             kappa.grid.shape, dim, k - 1);
    CovectorField gamma = CovectorField::make(kappa.grid.lo, kappa.grid.hi,
                                              kappa.grid.shape, dim, k - 2);

    const Covector da = d_alpha(dim);
    const Covector da_pow = wedge_power(da, k - n - 1); // used when k <= 2n
    const double volume_scale = std::pow(4.0, n) * std::tgamma(n + 1.0);

    parallel_for(0, kappa.grid.nodes(), [&](std::int64_t idx) {
        std::vector<int> node = kappa.grid.unindex(idx);
        HPoint p = node_point(kappa.grid, node);
        Covector kap = kappa.at_node(idx);
        if (k <= 2 * n) {
            ContactSplit ps = contact_decompose_pointwise(kap, p);
            beta.set_node(idx, ps.beta);
            gamma.set_node(idx, wedge(ps.gamma, da_pow));
        } else {
            // top degree: kappa = f (d alpha)^n ^ alpha, beta = 0,
            // gamma = f alpha ^ (d alpha)^{n-1}
            MultiIndex vol;
            for (int i = 1; i <= dim; ++i) vol.push_back(i);
            double f = kap.coeff(vol) / volume_scale;
            beta.set_node(idx, Covector(dim, k - 1));
            Covector g =
                wedge(contact_form_at(p), wedge_power(da, n - 1)) * f;
            gamma.set_node(idx, g);
        }
    });

    // beta' = beta - (-1)^k d gamma, gamma' = (-1)^k gamma
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    CovectorField dgamma = fd_exterior_derivative(gamma);
    ContactFieldSplit split;
    split.beta_prime = beta;
    split.gamma_prime = gamma;
    parallel_for(0, kappa.grid.nodes(), [&](std::int64_t idx) {
        Covector b = beta.at_node(idx) - dgamma.at_node(idx) * sign;
        split.beta_prime.set_node(idx, b);
        split.gamma_prime.set_node(idx, gamma.at_node(idx) * sign);
    });
    return split;
}

double contact_reconstruction_residual(const CovectorField& kappa,
                                       const ContactFieldSplit& split) {
    const int dim = kappa.dim;
    CovectorField ga = CovectorField::make(kappa.grid.lo, kappa.grid.hi,
                                           kappa.grid.shape, dim,
                                           kappa.degree - 1);
    parallel_for(0, kappa.grid.nodes(), [&](std::int64_t idx) {
        HPoint p = node_point(kappa.grid, kappa.grid.unindex(idx));
        ga.set_node(idx,
                    wedge(split.gamma_prime.at_node(idx), contact_form_at(p)));
    });
    CovectorField dga = fd_exterior_derivative(ga);

    std::vector<double> sup((size_t)kappa.grid.nodes(), 0.0);
    parallel_for(0, kappa.grid.nodes(), [&](std::int64_t idx) {
        HPoint p = node_point(kappa.grid, kappa.grid.unindex(idx));
        Covector rec =
            wedge(split.beta_prime.at_node(idx), contact_form_at(p)) +
            dga.at_node(idx);
        sup[(size_t)idx] = (kappa.at_node(idx) - rec).max_abs_coeff();
    });
    double m = 0.0;
    for (double v : sup) m = std::max(m, v);
    return m;
}

} // namespace hkit
