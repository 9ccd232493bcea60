#ifndef HMV_PLECTIC_HPP
#define HMV_PLECTIC_HPP

#include <string>
#include <vector>

#include "hmv/finite_group.hpp"

namespace hmv {

/// A (Z/n)^k module with a group acting by invertible matrices mod n.
struct GModule {
    long modulus = 0;
    int rank = 0;
    // action[g] is a rank x rank matrix, row-major, entries in [0, modulus)
    std::vector<std::vector<std::vector<long>>> action;
};

// Verifies the homomorphism property over the full multiplication table.
GModule make_gmodule(const FiniteGroup& g, long modulus, int rank,
                     std::vector<std::vector<std::vector<long>>> action);
GModule trivial_gmodule(const FiniteGroup& g, long modulus, int rank);
// rank-1 module; values[g] must be units mod modulus (use -1 for negation)
GModule rank1_gmodule(const FiniteGroup& g, long modulus, std::vector<long> values);

// fixed vectors M^G, enumerated exactly (carrier must be small)
std::vector<std::vector<long>> module_invariants(const FiniteGroup& g, const GModule& m);

/// Wreath product G ^ sigma semidirect Sym(sigma).
///
/// Elements are pairs (f, pi) with f : {0..sigma-1} -> G and pi a
/// permutation; the product law is
///   (f, pi) * (f', pi') = ((f o pi') * f', pi o pi'),
/// i.e. component i of the product is f(pi'(i)) * f'(i) and permutations
/// compose with pi' applied first.
struct WreathGroup {
    FiniteGroup base;
    int sigma = 1;
    FiniteGroup realized;
    std::vector<Perm> perms; // lexicographic permutations of sigma letters

    int encode(const std::vector<int>& f, int perm_index) const;
    void decode(int w, std::vector<int>& f, int& perm_index) const;
};

WreathGroup wreath_group(const FiniteGroup& base, int sigma);

// q |-> ((t_{pi(i)}^{-1} q t_i)_i, pi_q) where pi_q permutes the cosets of
// sub; returns the image index in w.realized per element of q. Verified to
// be an injective homomorphism. w must be wreath_group(subgroup, [q:sub]).
std::vector<int> wreath_embedding(const FiniteGroup& q, const std::vector<int>& sub,
                                  const std::vector<int>& transversal,
                                  const WreathGroup& w);

// Coinduced module M^sigma over the wreath group: component i of (f,pi).v
// is f(pi^{-1}(i)) applied to component pi^{-1}(i) of v.
GModule coinduced_module(const GModule& m, const WreathGroup& w);

// Restrict a module along a homomorphism given by image indices.
GModule restrict_module(const GModule& big, const std::vector<int>& image,
                        const FiniteGroup& small);

/// Elementary divisors of H^1(G, M), ascending, each dividing the next.
/// Z^1 is cut out by the cocycle equations f(gh) = f(g) + g.f(h); the
/// quotient by coboundaries is presented over each prime power of the
/// modulus and resolved by integer Smith normal form.
std::vector<long> h1(const FiniteGroup& g, const GModule& m);

// closed form for cyclic groups: ker(norm) / (generator - 1)M, computed by
// brute-force carrier enumeration (independent of h1's linear algebra)
std::vector<long> h1_cyclic_oracle(const FiniteGroup& g, const GModule& m);

struct ShapiroResult {
    bool pass = false;
    std::vector<long> restricted_divisors; // H^1(Q, coinduced restricted)
    std::vector<long> subgroup_divisors;   // H^1(G, M)
};
// Shapiro's lemma at finite scale: H^1(Q, Coind M) == H^1(G, M).
ShapiroResult shapiro_check(const FiniteGroup& q, const std::vector<int>& sub,
                            const GModule& m);

struct PlecticResult {
    bool pass = false;
    std::vector<long> wreath_divisors; // H^1(G wr Sym(sigma), M^sigma)
    std::vector<long> base_divisors;   // H^1(G, M)
};
// Requires M^G = 0 (InvariantsNonzero otherwise); checks that restriction
// from the wreath product to the first factor is an isomorphism on H^1.
PlecticResult plectic_h1_check(const FiniteGroup& g, int sigma, const GModule& m);

struct TensorInductionResult {
    bool pass = false;
    long dimension = 0;                 // C(sigma, m)
    std::vector<long> tensor_character; // degree-m part of (triv + chi)^{x sigma}
    std::vector<long> subset_character; // unsigned m-subset power of Ind chi
};
// chi: one value in {+1,-1} per element of sub (indices into q);
// compares the degree-m graded character of the tensor induction with the
// unsigned m-subset character of the induced monomial representation.
TensorInductionResult tensor_induction_check(const FiniteGroup& q,
                                             const std::vector<int>& sub,
                                             const std::vector<int>& chi, int m);

/// One named instance of the built-in verification families.
struct FamilyOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<FamilyOutcome> run_shapiro_family();
std::vector<FamilyOutcome> run_plectic_family();
std::vector<FamilyOutcome> run_tensor_family();

std::string format_divisors(const std::vector<long>& d);

} // namespace hmv

#endif
