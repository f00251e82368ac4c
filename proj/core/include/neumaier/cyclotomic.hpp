#pragma once

// Exact arithmetic in Z[zeta_n]. Values are stored as coefficient vectors
// over 1, zeta, ..., zeta^(n-1), reduced modulo the n-th cyclotomic
// polynomial so that every value has exactly one representation (only the
// first phi(n) coefficients can be nonzero). Coefficients are 64-bit and
// every operation is overflow-checked; overflow raises InvariantError.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace neumaier::cyclo {

using i64 = std::int64_t;

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<i64>& cyclotomic_polynomial(unsigned n);

class CyclotomicInt {
 public:
  /// Zero of Z[zeta_n]; n >= 1.
  explicit CyclotomicInt(unsigned n);

  static CyclotomicInt from_int(unsigned n, i64 value);
  /// zeta_n^k for any integer k.
  static CyclotomicInt root(unsigned n, i64 k);
  /// sum_j coeffs[j] zeta^j with coeffs of any length, reduced.
  static CyclotomicInt from_coeffs(unsigned n, std::span<const i64> coeffs);

  unsigned order() const { return n_; }
  std::span<const i64> coeffs() const { return c_; }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(i64 k) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);

  /// Complex conjugate: zeta^j -> zeta^(n-j).
  CyclotomicInt conj() const;

  /// The value when it lies in Z.
  std::optional<i64> as_integer() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void reduce();
  void check_same(const CyclotomicInt& o) const;

  unsigned n_;
  std::vector<i64> c_;
};

}  // namespace neumaier::cyclo
