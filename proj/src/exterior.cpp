#include "hkit/exterior.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hkit/heisenberg.hpp"

namespace hkit {

namespace {

void check_index(const MultiIndex& idx, int n, int k) {
    if (static_cast<int>(idx.size()) != k)
        throw std::invalid_argument("multi-index length does not match degree");
    int prev = 0;
    for (int i : idx) {
        if (i <= prev || i > n)
            throw std::invalid_argument("multi-index not strictly increasing in 1..n");
        prev = i;
    }
}

} // namespace

Covector::Covector(int ambient_dim, int degree) : n_(ambient_dim), k_(degree) {
    if (n_ < 0 || k_ < 0 || k_ > n_)
        throw std::invalid_argument("covector degree must lie in [0, n]");
}

Covector Covector::basis(int n, MultiIndex idx, double c) {
    Covector out(n, static_cast<int>(idx.size()));
    check_index(idx, n, out.k_);
    if (c != 0.0) out.terms_[std::move(idx)] = c;
    return out;
}

Covector Covector::scalar(int n, double c) {
    Covector out(n, 0);
    if (c != 0.0) out.terms_[MultiIndex{}] = c;
    return out;
}

bool Covector::is_zero(double tol) const {
    for (const auto& [idx, c] : terms_)
        if (std::abs(c) > tol) return false;
    return true;
}

double Covector::coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0.0 : it->second;
}

void Covector::set_coeff(const MultiIndex& idx, double c) {
    check_index(idx, n_, k_);
    if (c == 0.0)
        terms_.erase(idx);
    else
        terms_[idx] = c;
}

void Covector::add_coeff(const MultiIndex& idx, double c) {
    check_index(idx, n_, k_);
    double& slot = terms_[idx];
    slot += c;
    if (slot == 0.0) terms_.erase(idx);
}

double Covector::apply(const std::vector<VectorN>& vectors) const {
    if (static_cast<int>(vectors.size()) != k_)
        throw std::invalid_argument("covector arity mismatch");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("vector dimension mismatch");
    if (k_ == 0) return coeff(MultiIndex{});
    double total = 0.0;
    Eigen::MatrixXd m(k_, k_);
    for (const auto& [idx, c] : terms_) {
        for (int r = 0; r < k_; ++r)
            for (int col = 0; col < k_; ++col)
                m(r, col) = vectors[col][idx[r] - 1];
        total += c * m.determinant();
    }
    return total;
}

Covector Covector::operator+(const Covector& other) const {
    if (n_ != other.n_ || k_ != other.k_)
        throw std::invalid_argument("covector shape mismatch in +");
    Covector out = *this;
    for (const auto& [idx, c] : other.terms_) out.add_coeff(idx, c);
    return out;
}

Covector Covector::operator-(const Covector& other) const {
    return *this + (other * -1.0);
}

Covector Covector::operator*(double s) const {
    Covector out(n_, k_);
    out.overflow_ = overflow_;
    if (s != 0.0)
        for (const auto& [idx, c] : terms_) out.terms_[idx] = c * s;
    return out;
}

double Covector::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::string Covector::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) return "0";
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*dx(";
        for (size_t i = 0; i < idx.size(); ++i)
            os << idx[i] << (i + 1 < idx.size() ? "," : "");
        os << ")";
    }
    return os.str();
}

std::vector<MultiIndex> multi_index_basis(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    MultiIndex cur(k);
    // iterative "next combination" in lexicographic order
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int j = pos + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int sort_sign(const MultiIndex& idx, MultiIndex& sorted) {
    sorted = idx;
    int sign = 1;
    for (size_t i = 1; i < sorted.size(); ++i) {
        int v = sorted[i];
        size_t j = i;
        while (j > 0 && sorted[j - 1] > v) {
            sorted[j] = sorted[j - 1];
            --j;
            sign = -sign;
        }
        sorted[j] = v;
    }
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return 0;
    return sign;
}

Covector wedge(const Covector& a, const Covector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    const int n = a.ambient_dim();
    const int k = a.degree() + b.degree();
    if (k > n) {
        // algebraic convention: the product lives in a zero space
        Covector out(n, n);
        out.mark_overflow();
        return out;
    }
    Covector out(n, k);
    MultiIndex merged, sorted;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            int sign = sort_sign(merged, sorted);
            if (sign != 0) out.add_coeff(sorted, sign * ca * cb);
        }
    }
    return out;
}

Covector hodge_star(const Covector& a) {
    const int n = a.ambient_dim();
    const int k = a.degree();
    Covector out(n, n - k);
    MultiIndex full, sorted;
    for (const auto& [idx, c] : a.terms()) {
        std::vector<bool> used(n + 1, false);
        for (int i : idx) used[i] = true;
        MultiIndex comp;
        comp.reserve(n - k);
        for (int i = 1; i <= n; ++i)
            if (!used[i]) comp.push_back(i);
        // sign of (1..n) -> (I, J)
        full = idx;
        full.insert(full.end(), comp.begin(), comp.end());
        int sign = sort_sign(full, sorted);
        out.add_coeff(comp, sign * c);
    }
    return out;
}

Covector interior_product(const VectorN& v, const Covector& a) {
    if (static_cast<int>(v.size()) != a.ambient_dim())
        throw std::invalid_argument("interior product: vector dimension mismatch");
    if (a.degree() == 0)
        throw std::invalid_argument("interior product needs degree >= 1");
    Covector out(a.ambient_dim(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (size_t r = 0; r < idx.size(); ++r) {
            double comp = v[idx[r] - 1];
            if (comp == 0.0) continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (size_t j = 0; j < idx.size(); ++j)
                if (j != r) rest.push_back(idx[j]);
            double sign = (r % 2 == 0) ? 1.0 : -1.0;
            out.add_coeff(rest, sign * comp * c);
        }
    }
    return out;
}

double inner(const Covector& a, const Covector& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.degree() != b.degree())
        throw std::invalid_argument("inner: covector shape mismatch");
    double s = 0.0;
    for (const auto& [idx, c] : a.terms()) s += c * b.coeff(idx);
    return s;
}

Covector symplectic_form(int n) {
    Covector w(2 * n, 2);
    for (int j = 1; j <= n; ++j)
        w.set_coeff({2 * j - 1, 2 * j}, 1.0);
    return w;
}

namespace {

Covector symplectic_power(int n, int k) {
    Covector w = symplectic_form(n);
    Covector acc = Covector::scalar(2 * n, 1.0);
    for (int i = 0; i < k; ++i) acc = wedge(acc, w);
    return acc;
}

struct LefschetzKey {
    int n;
    int k;
    bool operator<(const LefschetzKey& o) const {
        return n != o.n ? n < o.n : k < o.k;
    }
};

struct LefschetzSystem {
    std::vector<MultiIndex> dom; // degree n-k basis
    std::vector<MultiIndex> img; // degree n+k basis
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    double condition = 0.0;
};

std::map<LefschetzKey, LefschetzSystem> g_lefschetz_cache;
std::mutex g_lefschetz_mutex;

const LefschetzSystem& lefschetz_system(int n, int k_power) {
    std::lock_guard<std::mutex> lock(g_lefschetz_mutex);
    LefschetzKey key{n, k_power};
    auto it = g_lefschetz_cache.find(key);
    if (it != g_lefschetz_cache.end()) return it->second;

    LefschetzSystem sys;
    sys.dom = multi_index_basis(2 * n, n - k_power);
    sys.img = multi_index_basis(2 * n, n + k_power);
    const int dim = static_cast<int>(sys.dom.size());
    if (dim != static_cast<int>(sys.img.size()))
        throw std::logic_error("lefschetz: basis dimension mismatch");

    std::map<MultiIndex, int> img_pos;
    for (int i = 0; i < dim; ++i) img_pos[sys.img[i]] = i;

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    Covector wk = symplectic_power(n, k_power);
    for (int c = 0; c < dim; ++c) {
        Covector img = wedge(Covector::basis(2 * n, sys.dom[c]), wk);
        for (const auto& [idx, coeff] : img.terms())
            m(img_pos.at(idx), c) = coeff;
    }
    sys.lu = Eigen::PartialPivLU<Eigen::MatrixXd>(m);
    if (dim <= 256) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        double smin = svd.singularValues()(dim - 1);
        sys.condition = smin > 0 ? svd.singularValues()(0) / smin
                                 : std::numeric_limits<double>::infinity();
    }
    auto [pos, ok] = g_lefschetz_cache.emplace(key, std::move(sys));
    (void)ok;
    return pos->second;
}

} // namespace

Covector lefschetz_apply(const Covector& a, int k_power) {
    const int dim = a.ambient_dim();
    if (dim % 2 != 0)
        throw std::invalid_argument("lefschetz: ambient dimension must be even");
    const int n = dim / 2;
    if (k_power < 1 || k_power > n)
        throw std::invalid_argument("lefschetz: k_power out of range");
    if (a.degree() != n - k_power)
        throw std::invalid_argument("lefschetz_apply expects degree n - k_power");
    return wedge(a, symplectic_power(n, k_power));
}

Covector lefschetz_invert(const Covector& b, int k_power) {
    const int dim = b.ambient_dim();
    if (dim % 2 != 0)
        throw std::invalid_argument("lefschetz: ambient dimension must be even");
    const int n = dim / 2;
    if (n > 8)
        throw std::invalid_argument("lefschetz_invert is capped at n <= 8");
    if (k_power < 1 || k_power > n)
        throw std::invalid_argument("lefschetz: k_power out of range");
    if (b.degree() != n + k_power)
        throw std::invalid_argument("lefschetz_invert expects degree n + k_power");

    const LefschetzSystem& sys = lefschetz_system(n, k_power);
    const int m = static_cast<int>(sys.img.size());
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) rhs(i) = b.coeff(sys.img[i]);
    Eigen::VectorXd sol = sys.lu.solve(rhs);

    Covector a(2 * n, n - k_power);
    for (int i = 0; i < m; ++i)
        if (sol(i) != 0.0) a.set_coeff(sys.dom[i], sol(i));

    Covector residual = lefschetz_apply(a, k_power) - b;
    double scale = std::max(1.0, b.max_abs_coeff());
    if (residual.max_abs_coeff() > 1e-9 * scale)
        throw std::logic_error("lefschetz_invert: residual exceeds 1e-9");
    return a;
}

double lefschetz_condition(int n, int k_power) {
    return lefschetz_system(n, k_power).condition;
}

void split_dt(const Covector& kappa, Covector& planar, Covector& rest) {
    const int n = kappa.ambient_dim();
    const int k = kappa.degree();
    planar = Covector(n, k);
    rest = Covector(n, k - 1 >= 0 ? k - 1 : 0);
    for (const auto& [idx, c] : kappa.terms()) {
        if (!idx.empty() && idx.back() == n) {
            MultiIndex head(idx.begin(), idx.end() - 1);
            rest.add_coeff(head, c); // dx_I = dx_{I'} ^ dt, t is the last index
        } else {
            planar.add_coeff(idx, c);
        }
    }
}

ContactSplit contact_decompose_pointwise(const Covector& kappa,
                                         const HPoint& p) {
    const int dim = kappa.ambient_dim();
    if (dim % 2 != 1)
        throw std::invalid_argument("contact split needs ambient dim 2n+1");
    const int n = dim / 2;
    if (p.n() != n)
        throw std::invalid_argument("contact split: point lives in a different H^n");
    const int k = kappa.degree();
    if (k < n + 1 || k > 2 * n)
        throw std::invalid_argument("contact split needs n+1 <= k <= 2n");

    // kappa = planar + beta ^ dt with beta, planar free of dt, so matching
    // the dt part of beta ^ alpha(p) forces beta and leaves
    // delta = planar - beta ^ a_planar for the Lefschetz step.
    Covector planar, beta;
    split_dt(kappa, planar, beta);

    Covector a_planar(dim, 1); // alpha(p) - dt
    for (int j = 1; j <= n; ++j) {
        a_planar.set_coeff({2 * j - 1}, -2.0 * p.y(j));
        a_planar.set_coeff({2 * j}, 2.0 * p.x(j));
    }
    Covector delta = planar - wedge(beta, a_planar);

    // Solve delta = gamma ^ (d alpha)^{k-n} = 4^{k-n} gamma ^ omega^{k-n}
    // inside the planar subalgebra of R^{2n}.
    Covector delta2n(2 * n, k);
    for (const auto& [idx, c] : delta.terms()) delta2n.set_coeff(idx, c);
    Covector gamma2n =
        lefschetz_invert(delta2n, k - n) * std::pow(4.0, -(k - n));

    Covector gamma(dim, 2 * n - k);
    for (const auto& [idx, c] : gamma2n.terms()) gamma.set_coeff(idx, c);
    return ContactSplit{beta, gamma};
}

} // namespace hkit
