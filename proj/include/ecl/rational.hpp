#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) { return r.str(); }

inline Rat rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rat(num, den);
}

// C(n, k) as an exact integer; 0 for k out of range.
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (long long j = 0; j < k; ++j) {
    r *= Int(n - j);
    r /= Int(j + 1);
  }
  return r;
}

inline Int factorial(long long n) {
  Int r = 1;
  for (long long j = 2; j <= n; ++j) r *= j;
  return r;
}

// Bernoulli numbers B_0..B_m from x/(e^x - 1), so B_1 = -1/2.
std::vector<Rat> bernoulli(int m);

// Dense rational matrix helpers used by the exact linear algebra paths.
using MatQ = std::vector<std::vector<Rat>>;

MatQ matq_zero(std::size_t rows, std::size_t cols);
MatQ matq_identity(std::size_t n);
MatQ matq_mul(const MatQ& a, const MatQ& b);
MatQ matq_add(const MatQ& a, const MatQ& b, const Rat& cb = Rat(1));
MatQ matq_scale(const MatQ& a, const Rat& c);
bool matq_is_zero(const MatQ& a);
MatQ matq_commutator(const MatQ& a, const MatQ& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> matq_rref(MatQ& a);

// Basis of the null space of a (columns are coordinates).
std::vector<std::vector<Rat>> matq_nullspace(const MatQ& a);

// Solve a x = b; throws if singular.
std::vector<Rat> matq_solve(MatQ a, std::vector<Rat> b);

MatQ matq_inverse(const MatQ& a);

}  // namespace ecl
