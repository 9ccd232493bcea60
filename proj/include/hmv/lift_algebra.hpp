#ifndef HMV_LIFT_ALGEBRA_HPP
#define HMV_LIFT_ALGEBRA_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hmv {

/// Commutative algebra on degree-2 generators x_0..x_{r-1} (interior classes)
/// and b_0..b_{B-1} (boundary symbols), with every product b*x and b*b set to
/// zero. Coefficients are polynomials over Q in formal lift coefficients
/// c_{tau,i}, so identities proved here hold for all coefficient values.
class LiftAlgebra {
public:
    LiftAlgebra(int r, int n_boundary);

    using GenMonomial = std::vector<int>;  // sorted generator ids
    using CoefMonomial = std::vector<int>; // sorted c-variable ids
    using CoefPoly = std::map<CoefMonomial, mpq_class>;
    using Element = std::map<GenMonomial, CoefPoly>;

    int r() const { return r_; }
    int n_boundary() const { return nb_; }
    bool is_boundary(int gen) const { return gen >= r_; }
    int cvar(int tau, int i) const { return tau * nb_ + i; }

    Element x(int tau) const;
    Element b(int i) const;
    // L_tau = x_tau + sum_i c_{tau,i} b_i with indeterminate coefficients
    Element lift(int tau) const;

    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;

    // Reduce modulo the relation ideal. `reverse_order` processes the
    // monomial list in the opposite order; both must agree (confluence).
    Element reduce(const Element& e, bool reverse_order = false) const;

    static bool is_zero(const Element& e);
    std::string str(const Element& e) const;

private:
    int r_;
    int nb_;
    bool monomial_dies(const GenMonomial& m) const;
};

struct LiftCheckTrace {
    int r = 0;
    int m = 0;
    bool pass = false;
    long products_checked = 0;
    std::vector<std::string> lines; // one entry per subset I
};

// Expands prod_{tau in I} L_tau for every |I| = m and verifies the normal
// form is exactly x_I (no boundary symbols, no lift coefficients survive),
// plus distinctness of the monomials x_I.
LiftCheckTrace lift_independence_check(int r, int m);

struct SplittingReport {
    int r = 0;
    std::vector<int> split_compact;  // degrees n with H^n_c split (2 < n <= r)
    std::vector<int> split_ordinary; // degrees n with H^n split (r <= n < 2r-2)
    std::vector<int> nonsplit;       // {2, 2r-2}: H^2_c and H^{2r-2}
    std::string uniqueness_reason;
    bool quadratic_remark = false; // r = 2: outside the theorem ranges
};

SplittingReport splitting_report(int r);

} // namespace hmv

#endif
