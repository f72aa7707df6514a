#include "hk/fp_linalg.hpp"

#include <map>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p prime; a^(p-2) mod p
  std::uint64_t base = a % p, acc = 1, e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::size_t rank_mod_p_dense(std::vector<std::uint16_t> M, std::size_t rows,
                             std::size_t cols, std::uint32_t p) {
  if (p < 2 || p >= (1u << 15))
    throw std::invalid_argument("rank_mod_p_dense: p out of range");
  std::size_t rank = 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(M[r * cols + j], M[piv * cols + j]);
    std::uint32_t inv = mod_inverse(M[r * cols + c], p);
    if (inv != 1)
      for (std::size_t j = c; j < cols; ++j)
        M[r * cols + j] =
            static_cast<std::uint16_t>(std::uint64_t(M[r * cols + j]) * inv % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t f = M[i * cols + c];
      if (f == 0) continue;
      std::uint32_t g = p - f;
      const std::uint16_t* src = &M[r * cols];
      std::uint16_t* dst = &M[i * cols];
      for (std::size_t j = c; j < cols; ++j)
        dst[j] = static_cast<std::uint16_t>((dst[j] + std::uint64_t(g) * src[j]) % p);
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p_sparse(const FpSparseMatrix& m, std::uint32_t p,
                              std::size_t memory_cap_bytes) {
  using Col = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::map<std::uint32_t, Col> pivots;  // leading row -> reduced column
  std::size_t stored = 0;
  std::size_t rank = 0;
  std::map<std::uint32_t, std::uint32_t> work;
  for (const auto& col : m.cols) {
    work.clear();
    for (const auto& [r, v] : col) work[r] = v % p;
    while (!work.empty()) {
      auto lead = work.begin();
      if (lead->second == 0) {
        work.erase(lead);
        continue;
      }
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) {
        Col reduced;
        reduced.reserve(work.size());
        std::uint32_t inv = mod_inverse(lead->second, p);
        for (const auto& [r, v] : work)
          if (v) reduced.emplace_back(
              r, static_cast<std::uint32_t>(std::uint64_t(v) * inv % p));
        stored += reduced.size();
        if (stored * sizeof(Col::value_type) > memory_cap_bytes)
          throw capacity_error(
              "rank_mod_p_sparse: fill-in exceeded the memory cap of " +
              std::to_string(memory_cap_bytes) + " bytes");
        pivots.emplace(lead->first, std::move(reduced));
        ++rank;
        break;
      }
      std::uint32_t f = lead->second;
      std::uint32_t g = p - f;  // pivot column is scaled to lead value 1
      for (const auto& [r, v] : pit->second) {
        auto& slot = work[r];
        slot = static_cast<std::uint32_t>((slot + std::uint64_t(g) * v) % p);
        if (slot == 0) work.erase(r);
      }
    }
  }
  return rank;
}

std::size_t rank_mod_p(const FpSparseMatrix& m, std::uint32_t p,
                       const RankOptions& options) {
  std::size_t cols = m.cols.size();
  if (m.rows <= options.dense_dim_limit && cols <= options.dense_dim_limit) {
    std::vector<std::uint16_t> dense(m.rows * cols, 0);
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [r, v] : m.cols[j])
        dense[static_cast<std::size_t>(r) * cols + j] =
            static_cast<std::uint16_t>(v % p);
    return rank_mod_p_dense(std::move(dense), m.rows, cols, p);
  }
  return rank_mod_p_sparse(m, p, options.sparse_memory_cap_bytes);
}

}  // namespace hk
