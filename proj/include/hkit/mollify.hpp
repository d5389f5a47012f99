#pragma once

#include "hkit/sampling.hpp"

namespace hkit {

/// Radial bump kernel exp(-1/(1-r^2)) on |r| < 1, sampled on [-1, 1].
/// The discrete stencils built from it are renormalized to unit mass, so a
/// constant input survives mollification bit for bit.
class MollifierKernel {
public:
    explicit MollifierKernel(int resolution = 1025);

    int resolution() const { return (int)profile_.size(); }
    /// Unnormalized profile value at radius r (0 outside |r| < 1).
    double profile(double r) const;
    /// Radial derivative of the profile.
    double profile_derivative(double r) const;
    /// Tabulated samples on [-1, 1] (resolution entries).
    const std::vector<double>& tabulated() const { return profile_; }

    /// Symmetric 1-D stencil for scale eps on spacing h: offsets i*h,
    /// |i| <= K. Weights sum to exactly 1.
    std::vector<double> stencil1(double eps, double h) const;
    /// Stencil of the derivative kernel d/dx eta_eps, odd, sums to 0.
    std::vector<double> stencil1_derivative(double eps, double h) const;

    /// Tensor m-dim weights from the radial profile, normalized to mass 1.
    /// Returned row-major over the (2K+1)^m offset cube.
    std::vector<double> stencil(int m, double eps, double h, int& K) const;

private:
    std::vector<double> profile_; // samples on [-1, 1]
};

enum class PathBoundary { constant };
enum class GridBoundary { nearest };

/// Discrete f * eta_eps for a uniformly sampled path; the path is extended
/// constantly outside its domain. eps below one grid cell is an error.
SampledPath mollify(const SampledPath& f, double eps,
                    const MollifierKernel& kernel);

/// d/dx (f * eta_eps) computed in the subtracted-constant form
/// (f - f(x)) * eta_eps', one derivative per component.
SampledPath mollify_derivative(const SampledPath& f, double eps,
                               const MollifierKernel& kernel);

/// Grid mollification with nearest-node extension.
GridMap mollify(const GridMap& f, double eps, const MollifierKernel& kernel);

/// Gradient of the grid mollification, subtracted-constant form. Output has
/// comps * dims components ordered (c0/dx0, c0/dx1, ..., c1/dx0, ...).
GridMap mollify_derivative(const GridMap& f, double eps,
                           const MollifierKernel& kernel);

} // namespace hkit
