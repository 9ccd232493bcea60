#ifndef HMV_NUMFIELD_HPP
#define HMV_NUMFIELD_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hmv/polynomial.hpp"

namespace hmv {

/// Element of Q[x]/(poly): coefficient vector of length degree(poly),
/// constant term first.
using FieldElement = std::vector<mpq_class>;

struct TotallyRealField {
    std::vector<mpz_class> poly; // monic, constant term first
    int degree = 0;
    // Isolating intervals for the real roots, sorted ascending; this order
    // fixes the embedding index set.
    std::vector<RootInterval> embeddings;
    mpz_class disc;
    bool irreducibility_asserted = false; // provenance: user-supplied flag

    QPoly poly_q() const { return QPoly(poly.begin(), poly.end()); }
};

enum class UnitProvenance { computed, supplied };

struct UnitSystem {
    std::vector<FieldElement> units; // r-1 of them
    std::vector<int> norms;          // each +1 or -1
    UnitProvenance provenance = UnitProvenance::supplied;
    // Multiplicative independence is certified later by the regulator rank
    // certificate; until then the system is only known to be a finite-index
    // candidate.
    bool independence_pending = true;
};

// Rejects non-monic, reducible, or non-totally-real input. For degree > 6
// irreducibility cannot be brute-forced here and assert_irreducible must be
// set by the caller.
TotallyRealField make_field(const std::vector<mpz_class>& coeffs,
                            bool assert_irreducible = false);

RootInterval refine_embedding(const TotallyRealField& field, int index,
                              const mpq_class& width);

FieldElement elem_from_int(const TotallyRealField& f, long v);
FieldElement elem_add(const TotallyRealField& f, const FieldElement& a, const FieldElement& b);
FieldElement elem_sub(const TotallyRealField& f, const FieldElement& a, const FieldElement& b);
FieldElement elem_mul(const TotallyRealField& f, const FieldElement& a, const FieldElement& b);
FieldElement elem_pow(const TotallyRealField& f, FieldElement base, unsigned long e);
bool elem_is_zero(const FieldElement& a);

// Product of all embedding images, computed exactly as a resultant.
mpq_class norm(const TotallyRealField& field, const FieldElement& elem);

// Characteristic polynomial of multiplication by elem (monic, degree r).
QPoly char_poly(const TotallyRealField& field, const FieldElement& elem);

// Integral coordinates are not required (e.g. (1+x)/2 in Q(sqrt 5)); an
// algebraic integer is detected through its characteristic polynomial.
bool is_algebraic_integer(const TotallyRealField& field, const FieldElement& elem);

UnitSystem check_units(const TotallyRealField& field,
                       const std::vector<FieldElement>& units,
                       UnitProvenance provenance = UnitProvenance::supplied);

std::string format_element(const FieldElement& e);

} // namespace hmv

#endif
