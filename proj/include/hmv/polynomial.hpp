#ifndef HMV_POLYNOMIAL_HPP
#define HMV_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace hmv {

// Dense univariate polynomials over Q, constant term first.
// A dense representation keeps Sturm sequences and resultants simple
// at the degrees this project works with.
using QPoly = std::vector<mpq_class>;

int degree(const QPoly& p);            // -1 for the zero polynomial
QPoly trim(QPoly p);                   // strip trailing zero coefficients
mpq_class eval(const QPoly& p, const mpq_class& x);
QPoly derivative(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
// Euclidean division a = q*b + r, deg r < deg b (b nonzero).
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

mpq_class resultant(QPoly f, QPoly g);

// Sturm chain of a squarefree (or arbitrary) polynomial.
std::vector<QPoly> sturm_chain(const QPoly& f);
// Number of real roots in (a, b]; pass_infinite=true treats a,b as -inf/+inf.
int sturm_count(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b);
int sturm_count_all(const std::vector<QPoly>& chain);

struct RootInterval {
    mpq_class lo;
    mpq_class hi; // f(lo), f(hi) != 0 and exactly one root in (lo, hi)
};

// Isolating intervals for all real roots of a squarefree f, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const QPoly& f);

// Bisect until hi - lo <= width. Endpoints stay non-roots.
RootInterval refine_root(const QPoly& f, RootInterval iv, const mpq_class& width);

// Monic integer polynomial (constant first, leading 1 implicit in checks).
// Irreducibility over Q by rational root test plus brute-force search for
// monic integer factors of degree <= deg/2 (supported through degree 6).
bool is_irreducible_monic(const std::vector<mpz_class>& coeffs);
bool irreducibility_decidable(int degree);

mpz_class poly_discriminant(const std::vector<mpz_class>& coeffs);

} // namespace hmv

#endif
