#include "dlat/isomorphism.hpp"

#include <algorithm>

#include "dlat/domino.hpp"
#include "dlat/error.hpp"

namespace dlat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) throw InvalidInput("matrix shapes do not compose");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k)
      for (int j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
  return C;
}

std::vector<long long> operator*(const IntMatrix& A, const std::vector<long long>& x) {
  if (A.cols != static_cast<int>(x.size())) throw InvalidInput("matrix/vector shapes differ");
  std::vector<long long> y(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

std::string format(const IntMatrix& A) {
  std::string out;
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) {
      if (j) out += ' ';
      out += std::to_string(A(i, j));
    }
    out += '\n';
  }
  return out;
}

std::optional<std::vector<std::vector<Rational>>> solve_exact(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows != A.cols || B.rows != A.rows) throw InvalidInput("solve_exact: shape mismatch");
  const int n = A.rows, m = B.cols, w = n + m;
  IntMatrix M(n, w);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
    for (int j = 0; j < m; ++j) M(i, n + j) = B(i, j);
  }
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (M(k, k) == 0) {
      int p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return std::nullopt;
      for (int j = 0; j < w; ++j) std::swap(M(k, j), M(p, j));
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < w; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  std::vector<std::vector<Rational>> cols(m, std::vector<Rational>(n));
  for (int c = 0; c < m; ++c)
    for (int i = n - 1; i >= 0; --i) {
      Rational acc(M(i, n + c));
      for (int j = i + 1; j < n; ++j) acc -= Rational(M(i, j)) * cols[c][j];
      cols[c][i] = acc / Rational(M(i, i));
    }
  return cols;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& A) {
  auto cols = solve_exact(A, IntMatrix::identity(A.rows));
  if (!cols) return std::nullopt;
  IntMatrix inv(A.rows, A.rows);
  for (int c = 0; c < A.rows; ++c)
    for (int r = 0; r < A.rows; ++r) {
      const auto& q = (*cols)[c][r];
      if (q.denominator() != 1) return std::nullopt;
      inv(r, c) = q.numerator();
    }
  return inv;
}

BoxPermutation BoxPermutation::inverse() const {
  BoxPermutation inv{std::vector<int>(mapping.size()), even};
  for (std::size_t i = 0; i < mapping.size(); ++i) inv.mapping[mapping[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

BoxPermutation pi(int N) {
  if (N < 2) throw InvalidInput("pi needs N >= 2");
  BoxPermutation p{{}, N % 2 == 0};
  for (int i = 1; i <= N; ++i) {
    if (p.even) p.mapping.push_back(i <= N / 2 ? 2 * i - 1 : 2 * N - 2 * (i - 1));
    else p.mapping.push_back(i <= N / 2 ? 2 * i : 2 * (N - i) + 1);
  }
  return p;
}

CircleState phi_circ(const BoxSpec& spec, const CircleState& s) {
  if (s.scheme != Scheme::L) throw InvalidInput("phi_circ expects an L-scheme circle state");
  if (static_cast<int>(s.bits.size()) != spec.N) throw InvalidInput("circle state has wrong length");
  auto p = pi(spec.N);
  CircleState t{std::vector<int>(spec.N, 0), Scheme::D};
  for (int i = 1; i <= spec.N; ++i) t.bits[p.mapping[i - 1] - 1] = s.bits[i - 1];
  return t;
}

CircleState phi_circ_inverse(const BoxSpec& spec, const CircleState& t) {
  if (t.scheme != Scheme::D) throw InvalidInput("phi_circ_inverse expects a D-scheme circle state");
  if (static_cast<int>(t.bits.size()) != spec.N) throw InvalidInput("circle state has wrong length");
  auto p = pi(spec.N);
  CircleState s{std::vector<int>(spec.N, 0), Scheme::L};
  for (int i = 1; i <= spec.N; ++i) s.bits[i - 1] = t.bits[p.mapping[i - 1] - 1];
  return s;
}

Partition phi(const BoxSpec& spec, const Partition& s) {
  auto c = tableau_to_circle(spec, partition_to_tableau_L(spec, s));
  return gamma_tp(spec, gamma_ct(spec, phi_circ(spec, c)));
}

Partition phi_inverse(const BoxSpec& spec, const Partition& s) {
  auto c = gamma_tc(spec, gamma_pt(spec, s));
  return tableau_to_partition_L(spec, circle_to_tableau(spec, phi_circ_inverse(spec, c)));
}

MoveMatrix move_matrix(const BoxSpec& spec) {
  const int n = spec.N - 1;
  MoveMatrix M{IntMatrix(n, n), m_diag(spec)};
  for (int l = 1; l <= n; ++l) {
    auto b = beta_diag(spec, l);
    for (int i = 0; i < n; ++i) M.entries(i, l - 1) = b.delta[i];
  }
  return M;
}

DiagonalCoords apply_p(const BoxSpec& spec, const DiagonalCoords& d_L) {
  if (!is_valid(spec, d_L)) throw InvalidInput("not a valid diagonal sequence: " + format(d_L));
  auto M = move_matrix(spec);
  std::vector<long long> x(d_L.values.begin(), d_L.values.end());
  auto y = M.entries * x;
  DiagonalCoords out;
  for (std::size_t i = 0; i < y.size(); ++i) out.values.push_back(static_cast<int>(y[i]) + M.shift.values[i]);
  return out;
}

std::vector<int> decompose(const BoxSpec& spec, const DiagonalCoords& d) {
  if (!is_valid(spec, d)) throw InvalidInput("not a valid diagonal sequence: " + format(d));
  auto M = move_matrix(spec);
  const int n = spec.N - 1;
  IntMatrix rhs(n, 1);
  for (int i = 0; i < n; ++i) rhs(i, 0) = d.values[i] - M.shift.values[i];
  auto sol = solve_exact(M.entries, rhs);
  if (!sol) throw VerificationFailure("move matrix is singular for N=" + std::to_string(spec.N));
  std::vector<int> c;
  for (const auto& q : sol->front()) {
    if (q.denominator() != 1 || q.numerator() < 0)
      throw VerificationFailure("decomposition of " + format(d) + " is not a nonnegative integer vector");
    c.push_back(static_cast<int>(q.numerator()));
  }
  return c;
}

}  // namespace dlat
