#pragma once

#include <utility>

#include "hkit/exterior.hpp"
#include "hkit/sampling.hpp"

namespace hkit {

/// Covector-valued map on a uniform grid over a box in R^dim. Coefficients
/// are stored per basis element of Lambda^degree in lexicographic order.
struct CovectorField {
    GridMap grid;
    int dim = 0;
    int degree = 0;
    std::vector<MultiIndex> basis;

    static CovectorField make(std::vector<double> lo, std::vector<double> hi,
                              std::vector<int> shape, int dim, int degree);

    Covector at_node(long long idx) const;
    void set_node(long long idx, const Covector& c);
    double sup_coeff_norm() const;
};

/// Finite-difference exterior derivative: central differences inside,
/// second-order one-sided at the box faces, so the whole field is O(h^2).
/// Needs at least 3 nodes per axis.
CovectorField fd_exterior_derivative(const CovectorField& w);

/// Field version of the contact split on R^{2n+1} for n+1 <= k <= 2n+1:
///   kappa = beta' ^ alpha + d(gamma' ^ alpha),
/// built from the pointwise split plus beta' = beta - (-1)^k d gamma,
/// gamma' = (-1)^k gamma.
struct ContactFieldSplit {
    CovectorField beta_prime;  // degree k-1
    CovectorField gamma_prime; // degree k-2
};

ContactFieldSplit contact_decompose_exact(const CovectorField& kappa);

/// Sup-norm of kappa - beta' ^ alpha - d(gamma' ^ alpha) over all nodes.
double contact_reconstruction_residual(const CovectorField& kappa,
                                       const ContactFieldSplit& split);

} // namespace hkit
