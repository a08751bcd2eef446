#pragma once

#include "distint/bigint.hpp"
#include "distint/model.hpp"
#include "distint/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace distint {

// Explicit distance matrix of a connected complete multipartite graph:
// 0 on the diagonal, 1 across parts, 2 within a part.
struct DenseDistanceMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> cells;  // row-major

  std::uint8_t at(std::size_t i, std::size_t j) const {
    return cells[i * n + j];
  }
};

inline constexpr std::size_t kDefaultOracleLimit = 500;

// Materializes the matrix with parts laid out in spec order, vertices of a
// part contiguous. Throws TooLarge above the limit and InvalidSpec for a
// single-part graph with n >= 2 (edgeless, so distances are undefined).
DenseDistanceMatrix distance_matrix(const PartitionSpec& spec,
                                    std::size_t limit = kDefaultOracleLimit);

// Exact characteristic polynomial det(xI - D), coefficients ascending.
// Computed modulo enough word-size primes to cover a rigorous coefficient
// bound, then reconstructed; the result is exact, not probabilistic.
IntPoly charpoly_exact(const DenseDistanceMatrix& m);

// True iff the dense charpoly equals the expansion of the factored form.
bool cross_check(const PartitionSpec& spec,
                 std::size_t limit = kDefaultOracleLimit);

// Plain text dump: n on the first line, then n space-separated rows.
std::string dump_matrix(const DenseDistanceMatrix& m);

}  // namespace distint
