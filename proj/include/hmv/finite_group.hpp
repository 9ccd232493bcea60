#ifndef HMV_FINITE_GROUP_HPP
#define HMV_FINITE_GROUP_HPP

#include <string>
#include <vector>

namespace hmv {

using Perm = std::vector<int>; // images, perm[i] = image of i

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
int perm_fixed_points(const Perm& a);
// number of m-element subsets fixed setwise
long perm_fixed_subsets(const Perm& a, int m);

/// Finite group as a multiplication table over elements 0..order-1.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table; // table[a*order+b] = a*b
    int identity = 0;
    std::vector<int> inverse;
    std::string name;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
};

// Checks associativity (exhaustive up to order 64, sampled above), identity
// and inverse laws; throws on violation.
FiniteGroup make_group(std::vector<int> table, std::string name = "");

// all permutations of {0..n-1} in lexicographic order (the element order
// used by symmetric_group)
std::vector<Perm> symmetric_group_perms(int n);
int perm_sign(const Perm& a); // +1 or -1

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);       // n <= 5
FiniteGroup dihedral_group(int n);        // order 2n
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// "C1", "Cn", "CnxCm", "Sn", "Dn" (order 2n), "A4"
FiniteGroup group_by_name(const std::string& name);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);
// The subgroup on `elems` as a standalone group; element i of the result is
// elems_sorted[i]. Throws NotASubgroup.
FiniteGroup subgroup_group(const FiniteGroup& g, std::vector<int> elems,
                           std::string name = "");
// left cosets of the subgroup; returns one representative per coset,
// representatives[0] is the identity coset
std::vector<int> left_transversal(const FiniteGroup& g, const std::vector<int>& sub);
// index j with q * t_i in t_j * H
int coset_of(const FiniteGroup& g, const std::vector<int>& sub,
             const std::vector<int>& transversal, int element);

// action[g] must be a homomorphism to permutations; throws otherwise
void verify_action(const FiniteGroup& g, const std::vector<Perm>& action);

} // namespace hmv

#endif
