#pragma once

#include <optional>
#include <vector>

namespace hkit {

/// Finite time series of points in R^d over [a, b]: times strictly
/// increasing, one value row per time. Carries the declared Hoelder
/// exponent when the producer knows it (generators, CLI input).
struct SampledPath {
    std::vector<double> times;
    std::vector<std::vector<double>> values; // values[i] has size dim
    std::optional<double> declared_gamma;

    int dim() const { return values.empty() ? 0 : (int)values[0].size(); }
    int size() const { return (int)times.size(); }
    double a() const { return times.front(); }
    double b() const { return times.back(); }

    void validate() const;
    bool uniform_spacing(double rel_tol = 1e-9) const;
    double mean_dt() const;

    /// Piecewise-linear evaluation, constant beyond the ends.
    std::vector<double> eval(double t) const;
    double eval1(double t, int comp = 0) const;

    /// Single component as a scalar path.
    SampledPath component(int c) const;
    /// Components [c0, c0+count) as a path.
    SampledPath components(int c0, int count) const;
    /// Restriction to [ta, tb]; sample times are kept, the cut points are
    /// inserted by linear interpolation when they fall между nodes.
    SampledPath slice(double ta, double tb) const;

    double min_value(int comp) const;
    double max_abs() const;
};

/// Uniform rectangular grid map Omega subset R^m -> R^N, row-major with the
/// last axis fastest. shape[i] >= 2 nodes per axis.
struct GridMap {
    std::vector<double> lo, hi;  // box per axis
    std::vector<int> shape;      // nodes per axis
    int comps = 0;               // N
    std::vector<double> data;    // node-major, then component

    int dims() const { return (int)shape.size(); }
    long long nodes() const;
    double spacing(int axis) const;
    long long index(const std::vector<int>& node) const;
    std::vector<int> unindex(long long idx) const;
    std::vector<double> coord(const std::vector<int>& node) const;

    double at(long long node_idx, int c) const { return data[node_idx * comps + c]; }
    double& at(long long node_idx, int c) { return data[node_idx * comps + c]; }

    void validate() const;
    static GridMap make(std::vector<double> lo, std::vector<double> hi,
                        std::vector<int> shape, int comps);

    /// Multilinear interpolation; clamps to the box.
    std::vector<double> eval(const std::vector<double>& x) const;
};

} // namespace hkit
