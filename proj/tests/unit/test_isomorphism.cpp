#include <gtest/gtest.h>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"
#include "dlat/isomorphism.hpp"
#include "dlat/oracle.hpp"
#include "dlat/verify.hpp"

using namespace dlat;

namespace {

const BoxSpec s26 = BoxSpec::make(2, 6);

Partition P(const BoxSpec& spec, const char* s) { return parse_partition(spec, s); }

CircleState dots(int N, std::vector<int> on, Scheme scheme) {
  CircleState c{std::vector<int>(N, 0), scheme};
  for (int i : on) c.bits[i - 1] = 1;
  return c;
}

}  // namespace

TEST(Isomorphism, BoxPermutation) {
  EXPECT_EQ(pi(6).mapping, (std::vector<int>{1, 3, 5, 6, 4, 2}));
  EXPECT_EQ(pi(9).mapping, (std::vector<int>{2, 4, 6, 8, 9, 7, 5, 3, 1}));
  EXPECT_EQ(pi(2).mapping, (std::vector<int>{1, 2}));
  for (int N = 2; N <= 12; ++N) {
    auto p = pi(N);
    auto q = p.inverse();
    for (int i = 1; i <= N; ++i) EXPECT_EQ(q.mapping[p.mapping[i - 1] - 1], i);
  }
  EXPECT_THROW(pi(1), InvalidInput);
}

TEST(Isomorphism, CircleMap) {
  EXPECT_EQ(phi_circ(s26, dots(6, {4, 5}, Scheme::L)), dots(6, {4, 6}, Scheme::D));
  EXPECT_EQ(phi_circ(s26, dots(6, {1, 3}, Scheme::L)), dots(6, {1, 5}, Scheme::D));
  auto zero = BoxSpec::make(1, 6);
  EXPECT_EQ(phi_circ_inverse(zero, phi_circ(zero, dots(6, {2}, Scheme::L))), dots(6, {2}, Scheme::L));
  EXPECT_THROW(phi_circ(s26, dots(6, {1, 3}, Scheme::D)), InvalidInput);
}

TEST(Isomorphism, PhiValues) {
  EXPECT_EQ(phi_inverse(s26, P(s26, "4,3")), P(s26, "1,1"));
  EXPECT_EQ(phi(s26, P(s26, "0,0")), P(s26, "2,1"));
  EXPECT_EQ(phi(s26, P(s26, "4,4")), P(s26, "1,0"));
  EXPECT_EQ(phi(s26, P(s26, "4,0")), P(s26, "0,0"));
}

TEST(Isomorphism, PhiIsAColoredIsomorphism) {
  for (int N = 2; N <= 9; ++N)
    for (int k = 1; k < N; ++k)
      if (k * (N - k) <= 12) EXPECT_EQ(verify::phi_iso(BoxSpec::make(k, N)), "") << k << " " << N;
}

TEST(Isomorphism, PhiOnSmallBox) {
  auto spec = BoxSpec::make(2, 5);
  auto L = build_l_a(spec);
  auto D = build_d_a(spec);
  std::vector<std::size_t> f;
  for (std::size_t v = 0; v < L.size(); ++v) f.push_back(D.index_of(format(phi(spec, parse_partition(spec, L.name(v))))));
  EXPECT_TRUE(oracle::check_constructed_iso(L, D, f));
}

TEST(Isomorphism, MoveMatrix) {
  auto M = move_matrix(s26).entries;
  const std::vector<std::vector<long long>> cols = {
      {0, 0, 0, -1, -1}, {0, -1, -1, 0, 0}, {-1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}};
  for (int l = 0; l < 5; ++l)
    for (int r = 0; r < 5; ++r) EXPECT_EQ(M(r, l), cols[l][r]);
  for (int l = 1; l <= 5; ++l) {
    std::vector<long long> e(5, 0);
    e[l - 1] = 1;
    auto col = M * e;
    auto beta = beta_diag(s26, l).delta;
    EXPECT_EQ(col, std::vector<long long>(beta.begin(), beta.end()));
  }
  for (int N = 4; N <= 10; ++N) {
    auto A = move_matrix(BoxSpec::make(1, N)).entries;
    auto inv = integer_inverse(A);
    ASSERT_TRUE(inv) << N;
    EXPECT_EQ(A * *inv, IntMatrix::identity(N - 1));
    EXPECT_EQ(*inv * A, IntMatrix::identity(N - 1));
  }
}

TEST(Isomorphism, ExactElimination) {
  IntMatrix A(2, 2);
  A(0, 0) = 2;
  A(1, 1) = 1;
  EXPECT_FALSE(integer_inverse(A));  // inverse has 1/2
  auto q = solve_exact(A, IntMatrix::identity(2));
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0][0], Rational(1, 2));
  IntMatrix S(2, 2);
  S(0, 0) = 1;
  S(0, 1) = 2;
  S(1, 0) = 2;
  S(1, 1) = 4;
  EXPECT_FALSE(solve_exact(S, IntMatrix::identity(2)));
  // needs a row swap
  IntMatrix W(2, 2);
  W(0, 1) = 1;
  W(1, 0) = 1;
  EXPECT_EQ(*integer_inverse(W), W);
}

TEST(Isomorphism, ApplyP) {
  EXPECT_EQ(format(apply_p(s26, parse_diagonal(s26, "(0,1,2,2,1)"))), "(0,1,1,2,1)");
  EXPECT_EQ(format(apply_p(s26, parse_diagonal(s26, "(0,0,0,0,0)"))), "(0,0,1,1,1)");
  for (const auto& s : all_partitions(s26))
    EXPECT_EQ(apply_p(s26, partition_to_diagonal(s26, s)), partition_to_diagonal(s26, phi(s26, s)));
}

TEST(Isomorphism, Decompose) {
  EXPECT_EQ(decompose(s26, parse_diagonal(s26, "(0,1,1,2,1)")), (std::vector<int>{0, 1, 2, 2, 1}));
  EXPECT_EQ(decompose(s26, m_diag(s26)), (std::vector<int>(5, 0)));
  EXPECT_EQ(decompose(s26, parse_diagonal(s26, "(1,2,2,2,1)")), (std::vector<int>{0, 0, 1, 2, 1}));
  // decompose inverts apply_p: coefficients are the L diagonal coordinates
  for (const auto& s : all_partitions(s26)) {
    auto c = decompose(s26, partition_to_diagonal(s26, phi(s26, s)));
    EXPECT_EQ(c, partition_to_diagonal(s26, s).values);
  }
}
