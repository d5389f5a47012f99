#pragma once

#include <functional>
#include <vector>

#include "hkit/mollify.hpp"
#include "hkit/sampling.hpp"
#include "hkit/winding.hpp"

namespace hkit {

/// Exact area of the intersection of an axis cell with the disk |x| <= R
/// centered at the origin.
double disk_cell_overlap(double x0, double y0, double x1, double y1,
                         double radius);

struct ZustResult {
    double value = 0.0;          // deepest level
    double error_estimate = 0.0; // Cauchy increment of the last refinement
    std::vector<int> levels;     // subsquares per axis
    std::vector<double> level_values;
};

/// Riemann-sum Jacobian over the unit square: at refinement k the domain
/// splits into k^2 subsquares and each contributes f(center) times the
/// Stieltjes loop integral of g1 dg2 around its boundary. Grid nodes must
/// align with every subdivision level (shape - 1 divisible by 2^k_levels).
/// alpha is the exponent declared for f, beta for g1 and g2; the sum
/// requires alpha + 2 beta > 2.
ZustResult zust_jacobian_square(const GridMap& f, const GridMap& g1,
                                const GridMap& g2, int k_levels, double alpha,
                                double beta);

struct ChangeOfVariablesReport {
    double lhs = 0.0;        // lim_eps int (v o f_eps) J_{f_eps} over the disk
    double rhs = 0.0;        // int v(y) w(f|boundary, y) dy via the winding field
    double gap = 0.0;        // |lhs - rhs|
    double mask_bound = 0.0; // |w|_inf x masked area of the field
    std::vector<double> eps_levels;
    std::vector<double> lhs_levels;
};

/// Both sides of the degree change-of-variables identity for a planar map
/// on the unit disk. `f` is a 2-component grid on a box containing the
/// disk with at least max(eps) of margin; `gamma` is its declared
/// exponent (> 1/2). The boundary restriction is sampled at
/// `boundary_samples` points of the unit circle.
ChangeOfVariablesReport change_of_variables_check(
    const GridMap& f, const std::function<double(double, double)>& v,
    std::vector<double> eps_sequence, double gamma,
    const MollifierKernel& kernel, int winding_resolution = 1024,
    int boundary_samples = 16384);

} // namespace hkit
