#include "hqft/smith.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hqft;
using test_support::from_mat;
using test_support::to_mat;

namespace {

void check_structure(const IntMatrix& A, const SmithDecomposition<Integer>& snf) {
  CHECK(snf.U * A * snf.V == snf.S);
  CHECK(snf.U * snf.U_inv == IntMatrix::Identity(A.rows(), A.rows()));
  CHECK(snf.V * snf.V_inv == IntMatrix::Identity(A.cols(), A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (i != j || i >= snf.rank) CHECK(snf.S(i, j) == 0);
}

std::vector<long long> diag_ll(const SmithDecomposition<Integer>& snf) {
  std::vector<long long> out;
  for (const auto& d : snf.diagonal()) out.push_back(static_cast<long long>(d));
  return out;
}

}  // namespace

TEST_CASE("smith form of small known matrices") {
  const IntMatrix A = from_mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto snf = smith_normal_form(A);
  check_structure(A, snf);
  CHECK(diag_ll(snf) == std::vector<long long>{2, 6, 12});

  const IntMatrix Z = IntMatrix::Zero(3, 2);
  const auto zs = smith_normal_form(Z);
  CHECK(zs.rank == 0);
  check_structure(Z, zs);

  const IntMatrix empty(0, 4);
  const auto es = smith_normal_form(empty);
  CHECK(es.rank == 0);
  CHECK(kernel_basis(es).cols() == 4);
}

TEST_CASE("smith form agrees with two oracles on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int t = 0; t < 150; ++t) {
    oracle::Mat a(static_cast<size_t>(dim(rng)), std::vector<long long>(static_cast<size_t>(dim(rng))));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    const auto snf = smith_normal_form(from_mat(a));
    check_structure(from_mat(a), snf);
    CHECK(diag_ll(snf) == oracle::invariant_factors(a));
    if (a.size() <= 4 && a[0].size() <= 4) CHECK(diag_ll(snf) == oracle::invariant_factors_by_minors(a));
  }
}

TEST_CASE("solve_integer finds solutions exactly when they exist") {
  const IntMatrix A = from_mat({{2, 0}, {0, 3}});
  IntVector b(2);
  b << 4, 9;
  auto x = solve_integer(A, b);
  REQUIRE(x);
  CHECK((*x)(0) == 2);
  CHECK((*x)(1) == 3);
  b << 3, 9;
  CHECK_FALSE(solve_integer(A, b));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int t = 0; t < 100; ++t) {
    oracle::Mat a(static_cast<size_t>(dim(rng)), std::vector<long long>(static_cast<size_t>(dim(rng))));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    std::vector<long long> rhs(a.size());
    for (auto& v : rhs) v = entry(rng);
    IntVector bv(static_cast<Eigen::Index>(rhs.size()));
    for (size_t i = 0; i < rhs.size(); ++i) bv(static_cast<Eigen::Index>(i)) = rhs[i];
    const auto found = solve_integer(from_mat(a), bv);
    CHECK(found.has_value() == oracle::integer_solvable(a, rhs));
    if (found) CHECK(from_mat(a) * *found == bv);
  }
}

TEST_CASE("kernel basis spans the integer kernel") {
  const IntMatrix A = from_mat({{1, 2, 3}, {2, 4, 6}});
  const IntMatrix K = kernel_basis(A);
  CHECK(K.cols() == 2);
  CHECK(A * K == IntMatrix::Zero(A.rows(), K.cols()));
  const auto Ks = smith_normal_form(K);
  CHECK(diag_ll(Ks) == std::vector<long long>{1, 1});
}
