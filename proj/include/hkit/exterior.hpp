#pragma once

#include <map>
#include <string>
#include <vector>

namespace hkit {

/// Strictly increasing tuple of 1-based coordinate indices.
using MultiIndex = std::vector<int>;

/// Tangent vector in R^n, components on the coordinate frame.
using VectorN = std::vector<double>;

/// A k-covector over R^n stored as coefficients on the basis dx_I,
/// I strictly increasing. Unlisted indices are implicitly zero. Values are
/// immutable in spirit: every operation returns a fresh covector.
class Covector {
public:
    Covector() = default;
    Covector(int ambient_dim, int degree);

    static Covector zero(int n, int k) { return Covector(n, k); }
    /// The basis covector dx_I with coefficient c.
    static Covector basis(int n, MultiIndex idx, double c = 1.0);
    /// Degree-0 covector (a scalar).
    static Covector scalar(int n, double c);

    int ambient_dim() const { return n_; }
    int degree() const { return k_; }
    bool is_zero(double tol = 0.0) const;

    /// True when this value was produced by a wedge into degree > n.
    bool degree_overflow() const { return overflow_; }
    void mark_overflow() { overflow_ = true; }

    double coeff(const MultiIndex& idx) const;
    void set_coeff(const MultiIndex& idx, double c);
    void add_coeff(const MultiIndex& idx, double c);

    const std::map<MultiIndex, double>& terms() const { return terms_; }

    /// Evaluate on degree() many vectors via the determinant formula.
    /// Independent of the coefficient bookkeeping used by wedge and star,
    /// which is what makes it usable as an oracle in tests.
    double apply(const std::vector<VectorN>& vectors) const;

    Covector operator+(const Covector& other) const;
    Covector operator-(const Covector& other) const;
    Covector operator*(double s) const;

    double max_abs_coeff() const;
    std::string to_string() const;

private:
    int n_ = 0;
    int k_ = 0;
    bool overflow_ = false;
    std::map<MultiIndex, double> terms_;
};

/// All strictly increasing k-tuples over {1..n}, lexicographic.
std::vector<MultiIndex> multi_index_basis(int n, int k);

/// Sign of the permutation sorting `idx` (0 if a repeat is present),
/// by insertion-sort swap counting. Sorted tuple written to `sorted`.
int sort_sign(const MultiIndex& idx, MultiIndex& sorted);

Covector wedge(const Covector& a, const Covector& b);
Covector hodge_star(const Covector& a);
Covector interior_product(const VectorN& v, const Covector& a);

/// <a,b> under the inner product making dx_I orthonormal.
double inner(const Covector& a, const Covector& b);

/// Standard symplectic covector sum dx_i ^ dy_i on R^{2n},
/// coordinates interleaved (x1,y1,...,xn,yn).
Covector symplectic_form(int n);

/// a ^ omega^k_power, mapping degree n-k to degree n+k on R^{2n}.
Covector lefschetz_apply(const Covector& a, int k_power);

/// Inverse of lefschetz_apply via a dense LU solve on basis coefficients.
/// The map is provably invertible; a residual above 1e-9 is reported as a
/// logic error since it can only come from a broken assembly.
Covector lefschetz_invert(const Covector& b, int k_power);

/// Condition number of the Lefschetz basis matrix for (n, k_power),
/// ambient R^{2n}. Cached per pair.
double lefschetz_condition(int n, int k_power);

/// Pointwise contact split at p in R^{2n+1} (interleaved x,y then t):
/// kappa = beta ^ alpha(p) + gamma ^ (d alpha)^{k-n}, with beta and gamma
/// free of dt components.
struct ContactSplit {
    Covector beta;
    Covector gamma;
};

class HPoint; // heisenberg.hpp

ContactSplit contact_decompose_pointwise(const Covector& kappa,
                                         const HPoint& p);

/// Split kappa on R^{2n+1} into the dt-free part and the dt factor:
/// kappa = planar + rest ^ dt.
void split_dt(const Covector& kappa, Covector& planar, Covector& rest);

} // namespace hkit
