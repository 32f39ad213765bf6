#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dlat/type_a.hpp"

namespace dlat {

using Rational = boost::rational<long long>;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  long long& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B);
std::vector<long long> operator*(const IntMatrix& A, const std::vector<long long>& x);
std::string format(const IntMatrix& A);

// Fraction-free (Bareiss) elimination on [A | B], then rational back substitution.
// Returns nullopt when A is singular. Result is cols(B) solution columns, each of size n.
std::optional<std::vector<std::vector<Rational>>> solve_exact(const IntMatrix& A, const IntMatrix& B);
// Inverse when it exists and has integer entries.
std::optional<IntMatrix> integer_inverse(const IntMatrix& A);

struct BoxPermutation {
  std::vector<int> mapping;  // mapping[i-1] = pi(i)
  bool even = true;
  BoxPermutation inverse() const;
  friend bool operator==(const BoxPermutation&, const BoxPermutation&) = default;
};

BoxPermutation pi(int N);

CircleState phi_circ(const BoxSpec& spec, const CircleState& s);
CircleState phi_circ_inverse(const BoxSpec& spec, const CircleState& t);

Partition phi(const BoxSpec& spec, const Partition& s);
Partition phi_inverse(const BoxSpec& spec, const Partition& s);

struct MoveMatrix {
  IntMatrix entries;  // column l-1 is beta_diag(spec, l)
  DiagonalCoords shift;
};

MoveMatrix move_matrix(const BoxSpec& spec);
DiagonalCoords apply_p(const BoxSpec& spec, const DiagonalCoords& d_L);
// Coefficients c with P c = d - m. Throws VerificationFailure unless c is a nonnegative
// integer vector.
std::vector<int> decompose(const BoxSpec& spec, const DiagonalCoords& d);

}  // namespace dlat
