#ifndef HMV_COHMODEL_HPP
#define HMV_COHMODEL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hmv/finite_group.hpp"

namespace hmv {

/// Dimension that may depend linearly on the external cusp-form dimension s.
struct SymDim {
    mpz_class c0; // constant part
    mpz_class cs; // coefficient of s

    SymDim() : c0(0), cs(0) {}
    SymDim(long v) : c0(v), cs(0) {} // NOLINT(google-explicit-constructor)
    SymDim(mpz_class a, mpz_class b) : c0(std::move(a)), cs(std::move(b)) {}
    static SymDim s() { return SymDim(0, 1); }

    SymDim operator+(const SymDim& o) const { return {c0 + o.c0, cs + o.cs}; }
    SymDim operator-(const SymDim& o) const { return {c0 - o.c0, cs - o.cs}; }
    bool operator==(const SymDim& o) const = default;
    bool is_zero() const { return c0 == 0 && cs == 0; }
    std::string str() const;
};

struct GaloisDatum {
    FiniteGroup group;
    std::vector<Perm> pi0_action;   // one permutation of components per element
    std::vector<Perm> cusp_action;  // one permutation of cusps per element
    std::vector<Perm> sigma_action; // optional action on embeddings (may be empty)
    std::vector<int> eps;           // cusp -> component, equivariant surjection

    int n_pi0() const { return static_cast<int>(pi0_action[0].size()); }
    int n_cusps() const { return static_cast<int>(cusp_action[0].size()); }
};

GaloisDatum make_galois_datum(FiniteGroup group, std::vector<Perm> pi0_action,
                              std::vector<Perm> cusp_action, std::vector<int> eps,
                              std::vector<Perm> sigma_action = {});

// Level-1 default: trivial group, one component, h cusps.
GaloisDatum default_galois_datum(int cusps);

enum class PieceKind { BoundaryWedge, DualBoundaryWedge, EtaSpan, Cusp, Zero };

struct GradedPiece {
    PieceKind kind;
    int param;  // k for wedges, m for EtaSpan
    int degree; // n
    int weight;
    int twist;  // Tate twist exponent
    SymDim dim;
};

struct TableRow {
    int n;
    SymDim Hc, H, Hint, Hbd;
    std::vector<GradedPiece> bd_pieces;
    std::vector<GradedPiece> int_pieces;
};

struct CohomologyTable {
    int r;
    long c;     // number of components
    long h_inf; // number of cusps
    std::optional<long> s; // cusp-form dimension when numeric
    std::vector<TableRow> rows; // n = 0 .. 2r
};

mpz_class binomial(long n, long k);

// dim H^n_bd for n = 0..2r (zero past 2r-1)
std::vector<SymDim> boundary_dims(int r, long h_inf);
// dim H^n_! for n = 0..2r
std::vector<SymDim> interior_dims(int r, long c, const SymDim& s);

CohomologyTable assemble_table(int r, const GaloisDatum& galois, std::optional<long> s);
// direct parameter entry (used when no explicit level datum is given)
CohomologyTable assemble_table_params(int r, long c, long h_inf, std::optional<long> s);

// Character of the finite-group action on the piece, one value per element.
std::vector<long> module_descriptor(const GradedPiece& piece, const GaloisDatum& galois, int r);

// Basis labels eta_I for the EtaSpan(m) piece (per component copy).
std::vector<std::vector<int>> eta_basis_labels(int r, int m);

} // namespace hmv

#endif
