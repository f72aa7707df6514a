#ifndef HK_FP_LINALG_HPP
#define HK_FP_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace hk {

/// Sparse matrix over F_p, column-major: cols[j] lists (row, value) with
/// strictly increasing rows and values in (0, p).
struct FpSparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols;
};

struct RankOptions {
  /// Dense elimination is used when both dimensions are at most this
  /// limit (memory 2*dim^2 bytes); above it the sparse path applies.
  std::size_t dense_dim_limit = 20000;
  /// Hard cap on fill-in storage for the sparse path; exceeding it throws
  /// capacity_error.
  std::size_t sparse_memory_cap_bytes = std::size_t(3) << 30;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Rank by dense Gaussian elimination; M is row-major rows x cols and is
/// consumed.
std::size_t rank_mod_p_dense(std::vector<std::uint16_t> M, std::size_t rows,
                             std::size_t cols, std::uint32_t p);

/// Rank by left-looking sparse elimination with a fill-in memory cap.
std::size_t rank_mod_p_sparse(const FpSparseMatrix& m, std::uint32_t p,
                              std::size_t memory_cap_bytes);

/// Dispatches to the dense or sparse path per RankOptions.
std::size_t rank_mod_p(const FpSparseMatrix& m, std::uint32_t p,
                       const RankOptions& options = {});

}  // namespace hk

#endif  // HK_FP_LINALG_HPP
