#ifndef HMV_TOROIDAL_HPP
#define HMV_TOROIDAL_HPP

#include <gmpxx.h>

#include <array>
#include <vector>

#include "hmv/quadarith.hpp"
#include "hmv/quadirr.hpp"

namespace hmv {

/// Period of the minus continued fraction attached to a cusp of a real
/// quadratic field: the self-intersection cycle of the resolved boundary.
struct CuspCycle {
    std::vector<mpz_class> b; // canonical rotation (lexicographically least)
    QuadIrr seed;             // reduced seed aligned with b.front()
    mpz_class D;              // field discriminant
};

// Iterates w -> 1/(ceil(w) - w) until reduced (w > 1, 0 < conj(w) < 1).
QuadIrr reduce_seed(QuadIrr w);

// Cycle for the principal cusp, seeded by a module generator of o_F.
CuspCycle cusp_cycle(const QuadField& field);

// As cusp_cycle but from an explicit module generator (non-principal cusps).
CuspCycle cusp_cycle_from_seed(const QuadField& field, const QuadIrr& seed);

struct PeriodMatrix {
    std::array<std::array<mpz_class, 2>, 2> M; // product of [[b_k,-1],[1,0]]
    mpz_class trace;
    mpz_class s; // trace^2 - 4 = D * s^2
};

// det = 1, fixes the cycle seed as a Moebius map (both checked).
PeriodMatrix period_matrix(const CuspCycle& cycle);

// Eigenvalue (trace + s*sqrt(D))/2 as an element of Z[omega].
QuadInt period_eigenvalue(const QuadField& field, const PeriodMatrix& pm);

// k >= 1 with eigenvalue = (fundamental unit)^k.
long eigenvalue_unit_power(const QuadField& field, const PeriodMatrix& pm);

struct IntersectionMatrix {
    std::vector<std::vector<mpz_class>> entries;
    bool negative_definite;
};

// t >= 2 only; diagonal -b_k, adjacency 1 (or 2 when t = 2).
IntersectionMatrix intersection_matrix(const CuspCycle& cycle);

struct NerveRanks {
    long h0;
    long h1;
};

NerveRanks nerve_truncated(long length);       // path of `length` components
NerveRanks nerve_quotient(const CuspCycle& c); // cycle after the unit quotient

struct Pic0Rank {
    int rank;             // rank of the monodromy unit lattice
    long eigen_unit_power; // 0 when not derived from a quadratic cycle
};

Pic0Rank pic0_rank(const QuadField& field, const CuspCycle& cycle);
Pic0Rank pic0_rank_generic(int r); // rank bookkeeping for r >= 3 input

} // namespace hmv

#endif
