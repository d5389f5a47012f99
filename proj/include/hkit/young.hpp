#pragma once

#include <string>
#include <vector>

#include "hkit/mollify.hpp"
#include "hkit/sampling.hpp"

namespace hkit {

enum class YoungMethod { riemann_stieltjes, mollified };

/// Riemann-Stieltjes tag placement. Left is the reported realization;
/// midpoint exists because tag sensitivity is the canonical failure signal
/// when alpha + beta <= 1; trapezoid is the exact refinement limit on
/// piecewise-linear data and backs the area/height operations.
enum class SumTag { left, midpoint, trapezoid };

struct YoungResult {
    double value = 0.0;
    YoungMethod method = YoungMethod::riemann_stieltjes;
    double error_estimate = 0.0; // max deviation over the last two levels
    std::vector<double> level_keys;   // partition depth or eps per level
    std::vector<double> level_values; // integral value per level
    bool exponents_estimated = false; // declared gamma was missing
};

/// Declared exponents, estimated (with a warning flag) when absent.
double effective_exponent(const SampledPath& f, bool& estimated);

/// Adaptive Richardson extrapolation along a geometric ladder of keys.
/// Each stage estimates its own rate from the level differences and is only
/// applied while those rates are stable; rough data falls through to the
/// last raw level. `error` reports the max deviation over the last two
/// levels of the final stage.
double richardson_extrapolate(const std::vector<double>& keys,
                              const std::vector<double>& values,
                              double& error, int max_stages = 3);

/// int f dg over the common domain by dyadic Riemann-Stieltjes sums
/// refined to `depth`. Scalar paths. Throws young_condition_error unless
/// the (declared or estimated) exponents satisfy alpha + beta > 1.
YoungResult young_rs(const SampledPath& f, const SampledPath& g, int depth,
                     SumTag tag = SumTag::left);

/// Exact refinement limit of the Stieltjes sums for the sampled polylines:
/// sum (f_i + f_{i+1})/2 (g_{i+1} - g_i) over the merged breakpoints.
double stieltjes_trapezoid(const SampledPath& f, const SampledPath& g);

/// int f dg as the limit of int f_eps (g_eps)' dx along a decreasing eps
/// sequence, Richardson-extrapolated with rate alpha + beta - 1.
YoungResult young_mollified(const SampledPath& f, const SampledPath& g,
                            std::vector<double> eps_sequence,
                            const MollifierKernel& kernel);

struct YoungBound {
    double lhs = 0.0;   // |int f dg|
    double rhs = 0.0;   // |b-a|^{alpha+beta} [f]_alpha [g]_beta
    double ratio = 0.0; // lhs / rhs (0 when rhs is 0)
};

/// The vanishing-point bound: requires f(p) = 0 at some sample.
YoungBound young_bound_check(const SampledPath& f, const SampledPath& g,
                             double alpha, double beta);

struct FourierBlock {
    int k = 0;              // dyadic block 2^k <= |n| < 2^{k+1}
    double block_energy = 0.0;
    double bound = 0.0;     // [f]_alpha^2 2^{-2 k alpha}
};

/// Dyadic Fourier-block energies of a periodic path on [0,1] against the
/// Hoelder bound. N must be a power of two (matched endpoints are dropped).
std::vector<FourierBlock> fourier_block_bounds(const SampledPath& f,
                                               double alpha);

} // namespace hkit
