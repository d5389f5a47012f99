#pragma once

#include <cstdint>

#include "hkit/mollify.hpp"
#include "hkit/sampling.hpp"

namespace hkit {

enum class TargetMetric { euclidean, koranyi };

/// Scale-restricted Hoelder seminorm over sample pairs:
///   sup d(f(s), f(t)) / |s-t|^gamma over 0 < |s-t| < scale_eps.
/// Pass scale_eps = infinity for the plain seminorm. With the Koranyi
/// metric the path is read as a curve in H^n (d = 2n+1, interleaved).
double holder_seminorm(const SampledPath& f, double gamma,
                       double scale_eps,
                       TargetMetric metric = TargetMetric::euclidean);

/// Same scan over grid node pairs (Euclidean target only). Grids above
/// ~10^4 nodes are stride-subsampled to keep the scan quadratic-bounded.
double holder_seminorm(const GridMap& f, double gamma, double scale_eps);

/// Slope fit of log-oscillation against log-scale over dyadic lags; used
/// when a path arrives without a declared exponent.
double estimate_holder_exponent(const SampledPath& f);

/// Least concave majorant of a nondecreasing bounded sample set with
/// omega1(0+) = 0: the upper convex hull of {(0,0)} u graph, returned as a
/// piecewise-linear function (hull vertices).
struct ConcaveModulus {
    std::vector<double> knots;  // increasing, starts at 0
    std::vector<double> values; // concave, nondecreasing, values[0] = 0
    double operator()(double t) const;
};

ConcaveModulus concave_modulus(const std::vector<double>& t,
                               const std::vector<double>& omega1);

/// Layered mollification ext_R f(x, s) = psi(s/R) (f * eta_s)(x) on
/// R x (0, R]; psi is 1 on [0, 1/2] and 0 on [3/4, inf). The input must
/// vanish near its endpoints; if it does not, the extension is still
/// produced and `support_warning` is set.
struct GagliardoExtension {
    GridMap grid;       // axis 0 = x, axis 1 = s in (0, R]
    bool support_warning = false;
};

GagliardoExtension gagliardo_extend(const SampledPath& f, double r_cut,
                                    const MollifierKernel& kernel,
                                    int s_levels = 64);

/// The smoothstep cutoff used by the extension (plateaus met exactly).
double extension_cutoff(double s);

/// Random-phase lacunary cosine sum with decay matched to the requested
/// exponent: sum_k a^{-k gamma} cos(2 pi a^k x + phi_k) per component,
/// sampled at N+1 uniform points on [0, 1]. Genuinely gamma-Hoelder and
/// nowhere smoother, which is what the convergence fixtures need.
SampledPath weierstrass_path(double gamma, int a_base, int terms, int n_samples,
                             int dim, std::uint64_t seed);

} // namespace hkit
