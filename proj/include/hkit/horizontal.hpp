#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hkit/mollify.hpp"
#include "hkit/sampling.hpp"

namespace hkit {

/// Curve in H^n held as a SampledPath with d = 2n+1 components,
/// (x1, y1, ..., xn, yn, t).
struct HPath {
    SampledPath path;

    int n() const { return (path.dim() - 1) / 2; }
    SampledPath planar() const { return path.components(0, 2 * n()); }
    SampledPath planar_pair(int j) const; // (x_j, y_j), 1-based
    SampledPath height() const { return path.component(2 * n()); }

    void validate() const;
};

/// Required height change over [a, b] for horizontality:
///   -2 sum_j int_a^b x_j dy_j - y_j dx_j,
/// Stieltjes trapezoid form (the refinement limit on sampled data).
/// Components must be declared alpha-Hoelder with alpha > 1/2.
double height_change(const SampledPath& planar, double a, double b);

/// max_s | t(s) - t(a) - height_change(a, s) | over the samples.
double horizontality_residual(const HPath& curve);

/// Completion of a planar path to a horizontal curve with initial height
/// t0 (cumulative Stieltjes sums, O(N)).
HPath horizontal_lift_curve(const SampledPath& planar, double t0);

/// Lift of a planar map on a grid, when the loop obstructions vanish.
struct LiftMapResult {
    GridMap lifted;             // 2n+1 components
    double max_plaquette = 0.0; // worst fundamental loop area sum
    double tree_disagreement = 0.0;
};

struct ObstructionReport {
    double worst_loop_area = 0.0; // oriented area sum of the worst loop
    int worst_loop = -1;          // index into probe loops, -1 = plaquette
    double tolerance = 0.0;
};

/// Probe loop: closed polyline in domain coordinates; the planar image is
/// taken by grid interpolation.
using ProbeLoop = SampledPath;

std::variant<LiftMapResult, ObstructionReport> lift_map(
    const GridMap& f, double t0, const std::vector<ProbeLoop>& probe_loops,
    std::optional<double> loop_tolerance = std::nullopt);

/// Oriented area sum of the image of a probe loop (the quantity that must
/// vanish for a lift to exist), via the closing completion of each planar
/// pair.
double loop_area_sum(const GridMap& f, const ProbeLoop& loop);

/// Mollified contact pullback on a grid map into R^{2n+1}: the vector field
///   grad f_eps^t + 2 sum_j (f_eps^{x_j} grad f_eps^{y_j}
///                           - f_eps^{y_j} grad f_eps^{x_j})
/// per node, restricted to nodes at least `margin` inside the box
/// (margin defaults to eps plus one cell).
GridMap pullback_alpha_mollified(const GridMap& f, double eps,
                                 const MollifierKernel& kernel,
                                 std::optional<double> margin = std::nullopt);

/// Mollified pullback of a constant-coefficient 1-form kappa (coefficients
/// on dx1..dy_n, dt): sum_c kappa_c grad f_eps^c.
GridMap pullback_constant_form_mollified(const GridMap& f,
                                         const std::vector<double>& kappa,
                                         double eps,
                                         const MollifierKernel& kernel,
                                         std::optional<double> margin = std::nullopt);

enum class DecayForm { contact_alpha, generic_one_form };

struct DecayReport {
    std::vector<double> eps_values; // decreasing
    std::vector<double> sup_norms;
    double fitted_slope = 0.0;
    double reference_slope = 0.0;
    bool within_reference = false; // measured within 0.1 of the bound's side
    // A finite grid cannot certify "sup -> 0 with no rate"; the slope is
    // evidence at the sampled scales, not a membership decision.
    std::string note;
};

/// Least-squares slope of log sup|f_eps^* form| against log eps. For the
/// contact form the reference is 2 gamma - 1 (decay at least this fast);
/// for a generic 1-form it is -(1 - gamma) (blow-up no worse).
DecayReport decay_exponent_fit(const GridMap& f, DecayForm form,
                               const std::vector<double>& eps_grid,
                               double gamma_declared,
                               const MollifierKernel& kernel,
                               const std::vector<double>& kappa = {});

} // namespace hkit
