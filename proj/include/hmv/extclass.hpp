#ifndef HMV_EXTCLASS_HPP
#define HMV_EXTCLASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hmv/cohmodel.hpp"
#include "hmv/interval.hpp"
#include "hmv/lift_algebra.hpp"
#include "hmv/numfield.hpp"

namespace hmv {

/// (r-1) x r matrix of certified intervals, entry (j, i) enclosing
/// log|tau_i(eps_j)|.
struct RegulatorMatrix {
    std::vector<std::vector<Interval>> entries;
    long precision_bits = 0;
};

long max_precision_bits(); // PLECTIC_MAX_BITS env override, default 32768

// Refines embeddings and escalates precision (128 -> 256 -> ...) until the
// rank certificate is decided with at least target_margin and all maximal
// minors agree; throws PrecisionExhausted at the cap.
RegulatorMatrix hodge_regulator_matrix(const TotallyRealField& field,
                                       const UnitSystem& units,
                                       double target_margin = 1e-6,
                                       long start_bits = 128);

// |det| of the minor deleting the last column; positive lower bound certified.
Interval regulator(const RegulatorMatrix& matrix);

// All r maximal minors (column t deleted), as signed determinant intervals.
std::vector<Interval> maximal_minors(const RegulatorMatrix& matrix);

struct SymbolicExtensionClass {
    std::vector<std::vector<int>> eps_matrix; // cusps x components incidence
    std::vector<FieldElement> kummer_part;    // the validated units
    std::optional<long> ell;                  // decorative label
    int sign_convention = +1;
};

struct ExtensionVerdict {
    std::string status; // "nontrivial" | "indeterminate"
    bool eps_nonzero = false;
    double regulator_lower = 0.0; // certified lower bound of the regulator
    long precision_bits = 0;
    bool quadratic_remark = false; // r = 2 handled by the remark case
};

struct ExtensionClassResult {
    SymbolicExtensionClass cls;
    ExtensionVerdict verdict;
    RegulatorMatrix matrix;
};

ExtensionClassResult extension_class(const TotallyRealField& field,
                                     const UnitSystem& units,
                                     const GaloisDatum& galois,
                                     double target_margin = 1e-6,
                                     long start_bits = 128);

} // namespace hmv

#endif
