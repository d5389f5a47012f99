#include "hkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hkit {

void SampledPath::validate() const {
    if (times.size() < 2)
        throw std::invalid_argument("SampledPath needs at least 2 samples");
    if (times.size() != values.size())
        throw std::invalid_argument("SampledPath: times/values length mismatch");
    const size_t d = values[0].size();
    for (size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("SampledPath: times must strictly increase");
        if (values[i].size() != d)
            throw std::invalid_argument("SampledPath: ragged value rows");
        for (double v : values[i])
            if (!std::isfinite(v))
                throw std::invalid_argument("SampledPath: non-finite value");
    }
}

bool SampledPath::uniform_spacing(double rel_tol) const {
    const double dt = mean_dt();
    for (size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - times[i - 1] - dt) > rel_tol * std::abs(dt))
            return false;
    return true;
}

double SampledPath::mean_dt() const {
    return (times.back() - times.front()) / (double)(times.size() - 1);
}

std::vector<double> SampledPath::eval(double t) const {
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    size_t i = (size_t)(it - times.begin()) - 1;
    double w = (t - times[i]) / (times[i + 1] - times[i]);
    std::vector<double> out(values[i].size());
    for (size_t c = 0; c < out.size(); ++c)
        out[c] = (1.0 - w) * values[i][c] + w * values[i + 1][c];
    return out;
}

double SampledPath::eval1(double t, int comp) const {
    if (t <= times.front()) return values.front()[comp];
    if (t >= times.back()) return values.back()[comp];
    auto it = std::upper_bound(times.begin(), times.end(), t);
    size_t i = (size_t)(it - times.begin()) - 1;
    double w = (t - times[i]) / (times[i + 1] - times[i]);
    return (1.0 - w) * values[i][comp] + w * values[i + 1][comp];
}

SampledPath SampledPath::component(int c) const { return components(c, 1); }

SampledPath SampledPath::components(int c0, int count) const {
    SampledPath out;
    out.times = times;
    out.declared_gamma = declared_gamma;
    out.values.reserve(values.size());
    for (const auto& row : values)
        out.values.emplace_back(row.begin() + c0, row.begin() + c0 + count);
    return out;
}

SampledPath SampledPath::slice(double ta, double tb) const {
    if (!(ta < tb))
        throw std::invalid_argument("slice: need ta < tb");
    SampledPath out;
    out.declared_gamma = declared_gamma;
    out.times.push_back(ta);
    out.values.push_back(eval(ta));
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] > ta && times[i] < tb) {
            out.times.push_back(times[i]);
            out.values.push_back(values[i]);
        }
    }
    out.times.push_back(tb);
    out.values.push_back(eval(tb));
    return out;
}

double SampledPath::min_value(int comp) const {
    double m = values[0][comp];
    for (const auto& row : values) m = std::min(m, row[comp]);
    return m;
}

double SampledPath::max_abs() const {
    double m = 0.0;
    for (const auto& row : values)
        for (double v : row) m = std::max(m, std::abs(v));
    return m;
}

long long GridMap::nodes() const {
    long long n = 1;
    for (int s : shape) n *= s;
    return n;
}

double GridMap::spacing(int axis) const {
    return (hi[axis] - lo[axis]) / (double)(shape[axis] - 1);
}

long long GridMap::index(const std::vector<int>& node) const {
    long long idx = 0;
    for (size_t a = 0; a < shape.size(); ++a) idx = idx * shape[a] + node[a];
    return idx;
}

std::vector<int> GridMap::unindex(long long idx) const {
    std::vector<int> node(shape.size());
    for (int a = (int)shape.size() - 1; a >= 0; --a) {
        node[a] = (int)(idx % shape[a]);
        idx /= shape[a];
    }
    return node;
}

std::vector<double> GridMap::coord(const std::vector<int>& node) const {
    std::vector<double> x(shape.size());
    for (size_t a = 0; a < shape.size(); ++a)
        x[a] = lo[a] + spacing((int)a) * node[a];
    return x;
}

void GridMap::validate() const {
    if (shape.empty() || comps <= 0)
        throw std::invalid_argument("GridMap: empty shape or components");
    if (lo.size() != shape.size() || hi.size() != shape.size())
        throw std::invalid_argument("GridMap: box/shape rank mismatch");
    for (size_t a = 0; a < shape.size(); ++a) {
        if (shape[a] < 2)
            throw std::invalid_argument("GridMap: need >= 2 nodes per axis");
        if (!(hi[a] > lo[a]))
            throw std::invalid_argument("GridMap: box must have positive extent");
    }
    if ((long long)data.size() != nodes() * comps)
        throw std::invalid_argument("GridMap: data size mismatch");
}

GridMap GridMap::make(std::vector<double> lo, std::vector<double> hi,
                      std::vector<int> shape, int comps) {
    GridMap g;
    g.lo = std::move(lo);
    g.hi = std::move(hi);
    g.shape = std::move(shape);
    g.comps = comps;
    g.data.assign((size_t)(g.nodes() * comps), 0.0);
    g.validate();
    return g;
}

std::vector<double> GridMap::eval(const std::vector<double>& x) const {
    const int m = dims();
    std::vector<int> base(m);
    std::vector<double> w(m);
    for (int a = 0; a < m; ++a) {
        double u = (x[a] - lo[a]) / spacing(a);
        u = std::clamp(u, 0.0, (double)(shape[a] - 1));
        int i = std::min((int)u, shape[a] - 2);
        base[a] = i;
        w[a] = u - i;
    }
    std::vector<double> out(comps, 0.0);
    const int corners = 1 << m;
    std::vector<int> node(m);
    for (int c = 0; c < corners; ++c) {
        double weight = 1.0;
        for (int a = 0; a < m; ++a) {
            int bit = (c >> a) & 1;
            node[a] = base[a] + bit;
            weight *= bit ? w[a] : (1.0 - w[a]);
        }
        if (weight == 0.0) continue;
        long long idx = index(node);
        for (int k = 0; k < comps; ++k) out[k] += weight * at(idx, k);
    }
    return out;
}

} // namespace hkit
