#pragma once

#include "hqft/coefficients.hpp"
#include "hqft/complex.hpp"
#include "hqft/fixtures.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

namespace test_support {

inline oracle::Complex oracle_complex(const hqft::SimplicialComplex& X) {
  std::vector<std::vector<int>> maximal;
  for (const auto& s : X.maximal_simplices()) maximal.push_back(s.vertices);
  return oracle::Complex(maximal);
}

inline oracle::Mat to_mat(const hqft::IntMatrix& M) {
  oracle::Mat out(static_cast<size_t>(M.rows()), std::vector<long long>(static_cast<size_t>(M.cols())));
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long long>(M(i, j));
  return out;
}

inline hqft::IntMatrix from_mat(const oracle::Mat& a) {
  const auto rows = static_cast<Eigen::Index>(a.size());
  const auto cols = rows ? static_cast<Eigen::Index>(a[0].size()) : 0;
  hqft::IntMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return M;
}

inline std::vector<long long> factors_of(const hqft::FgAbGroup& G) {
  std::vector<long long> out;
  for (const auto& d : G.invariant_factors()) out.push_back(static_cast<long long>(d));
  return out;
}

inline std::string data(const std::string& name) { return std::string(HQFT_DATA_DIR) + "/" + name; }
inline std::string test_data(const std::string& name) { return std::string(HQFT_TEST_DATA_DIR) + "/" + name; }

}  // namespace test_support
