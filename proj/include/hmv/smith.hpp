#ifndef HMV_SMITH_HPP
#define HMV_SMITH_HPP

#include <gmpxx.h>

#include <vector>

namespace hmv {

/// Diagonal of the Smith normal form of an integer matrix (nonnegative,
/// each entry dividing the next). Transform matrices are not returned.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a);

} // namespace hmv

#endif
