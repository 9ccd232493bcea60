#ifndef HMV_INTERVAL_HPP
#define HMV_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace hmv {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
/// All operations enclose the exact result; the working precision is the
/// maximum of the operand precisions.
class Interval {
public:
    Interval();
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_int(long v, mpfr_prec_t prec);
    static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
    // [lo, hi] from two rationals, lo <= hi.
    static Interval from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                   mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator-() const;

    Interval abs() const;
    // log of the absolute value; requires the interval to exclude 0.
    Interval log_abs() const;

    bool contains_zero() const;
    bool excludes_zero() const;
    // sign of every point in the interval: -1, +1, or 0 when undecided.
    int certain_sign() const;
    // true iff the two intervals intersect.
    bool overlaps(const Interval& o) const;

    double lo_double() const; // rounded down
    double hi_double() const; // rounded up
    double width_double() const;

    // lower bound of |x| over the interval (0 if it contains 0).
    double abs_lower_double() const;

    // Deterministic decimal rendering (lo rounded down, hi rounded up).
    std::string lo_string() const;
    std::string hi_string() const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;

    friend void swap(Interval& a, Interval& b) noexcept;
};

void swap(Interval& a, Interval& b) noexcept;

/// Interval Horner evaluation of a polynomial with rational coefficients
/// (constant term first) on [x].
Interval eval_poly_interval(const std::vector<mpq_class>& coeffs,
                            const Interval& x, mpfr_prec_t prec);

/// Determinant of a square interval matrix by cofactor expansion.
/// Intended for the small (<= 7x7) matrices this project meets.
Interval interval_det(const std::vector<std::vector<Interval>>& m);

} // namespace hmv

#endif
