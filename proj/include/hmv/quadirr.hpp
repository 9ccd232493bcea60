#ifndef HMV_QUADIRR_HPP
#define HMV_QUADIRR_HPP

#include <gmpxx.h>

#include <string>

namespace hmv {

/// (p + sqrt d)/q with d > 0 non-square and q | d - p^2 (representation
/// invariant, preserved by every operation here). For fixed d the
/// representation of a value is unique, so operator== is value equality.
struct QuadIrr {
    mpz_class p;
    mpz_class q; // nonzero
    mpz_class d;

    bool operator==(const QuadIrr&) const = default;
};

QuadIrr make_quadirr(const mpz_class& p, const mpz_class& q, const mpz_class& d);

// sign of (p + sqrt d)/q - t, exact (never 0: the value is irrational)
int cmp_rational(const QuadIrr& w, const mpq_class& t);
int cmp_conjugate_rational(const QuadIrr& w, const mpq_class& t); // (p - sqrt d)/q vs t

mpz_class floor_quadirr(const QuadIrr& w);
mpz_class ceil_quadirr(const QuadIrr& w); // floor + 1 (value irrational)

// w reduced for the minus continued fraction: w > 1 and 0 < conj(w) < 1.
bool is_reduced(const QuadIrr& w);

// One minus-continued-fraction step: returns (b, w') with b = ceil(w),
// w' = 1/(b - w).
struct McfStep {
    mpz_class b;
    QuadIrr next;
};
McfStep mcf_step(const QuadIrr& w);

// Moebius image (a*w + b)/(c*w + d2); requires nonzero denominator.
QuadIrr moebius(const QuadIrr& w, const mpz_class& a, const mpz_class& b,
                const mpz_class& c, const mpz_class& d2);

std::string format_quadirr(const QuadIrr& w);

} // namespace hmv

#endif
