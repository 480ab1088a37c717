#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_n).
//
// A CycNumber of conductor n is stored as its coordinates over the power
// basis {zeta_n^j : 0 <= j < phi(n)}, i.e. reduced modulo the n-th cyclotomic
// polynomial.  Operands of different conductors are lifted to the lcm before
// any arithmetic, via zeta_m = zeta_n^(n/m).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charprod {

using Rational = mpq_class;
using BigInt = mpz_class;

std::uint32_t euler_phi(std::uint32_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

class CycNumber {
 public:
  CycNumber();
  CycNumber(long value);  // NOLINT: rational integers convert implicitly
  explicit CycNumber(const Rational& value);

  static CycNumber root_of_unity(std::uint32_t n, std::int64_t k);

  /// Builds sum_j coeffs[j] * zeta_n^j for any number of coefficients;
  /// exponents are reduced mod n and then modulo Phi_n.
  static CycNumber from_powers(std::uint32_t n, const std::vector<Rational>& coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; throws NotAnInteger when it is irrational.
  Rational to_rational() const;

  /// Same number written over Q(zeta_n); n must be a multiple of conductor().
  CycNumber lifted(std::uint32_t n) const;

  /// Same number over the smallest conductor this representation can
  /// descend to (exact for prime-power conductors and rationals).
  CycNumber normalized() const;

  /// Complex conjugation, zeta_n -> zeta_n^(n-1).
  CycNumber conjugate() const;

  /// In place: *this += c * zeta_n^k where n = conductor().
  void add_root(std::int64_t k, const Rational& c);

  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator*=(const Rational& r);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
  friend CycNumber operator*(const Rational& r, CycNumber a) { return a *= r; }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Human readable, e.g. "2 - z8^3 + 1/2*z8" (z8 = zeta_8).
  std::string to_string() const;

 private:
  CycNumber(std::uint32_t n, std::vector<Rational> coeffs);
  void lift_in_place(std::uint32_t n);

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;
};

inline CycNumber root_of_unity(std::uint32_t n, std::int64_t k) {
  return CycNumber::root_of_unity(n, k);
}

/// Returns the value when it is a rational integer; throws NotAnInteger otherwise.
std::int64_t as_rational_integer(const CycNumber& a);

}  // namespace charprod
