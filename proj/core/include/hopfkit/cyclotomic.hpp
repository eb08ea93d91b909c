#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/rational.hpp"

namespace hopfkit {

unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, low to high.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// The field Q(zeta_N) in the power basis {1, zeta, ..., zeta^(phi(N)-1)}.
///
/// Instances are interned: `get(N)` always returns the same object, which lives
/// for the whole program. The object is immutable after construction.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Integer>& modulus() const noexcept { return modulus_; }

  /// Coordinates of zeta^k, for any k (taken mod N).
  const std::vector<long>& power(long k) const;

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(unsigned order);

  unsigned order_;
  std::size_t degree_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<long>> powers_;
};

/// An element of Q(zeta_N) with exact rational coordinates.
///
/// Elements with all non-constant coordinates zero are stored at order 1, so
/// rational data stays cheap. Mixed-order arithmetic lifts both operands to
/// Q(zeta_lcm).
class CycScalar {
 public:
  CycScalar();
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  CycScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  CycScalar(unsigned order, std::vector<Rational> coords);

  /// zeta_N^k.
  static CycScalar zeta(unsigned order, long k = 1);

  unsigned order() const noexcept { return field_->order(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept { return coords_.size() == 1 && sgn(coords_[0]) == 0; }
  bool is_rational() const noexcept { return coords_.size() == 1; }
  bool is_one() const noexcept { return is_rational() && coords_[0] == 1; }
  /// Throws if the element is not rational.
  const Rational& rational() const;

  /// Same element expressed in Q(zeta_order); order must be a multiple of this->order().
  CycScalar lifted(unsigned order) const;
  /// Coordinates in Q(zeta_order) without the order-1 demotion.
  std::vector<Rational> coords_in(unsigned order) const;

  CycScalar inverse() const;
  /// Image under the Galois automorphism zeta -> zeta^k (gcd(k, N) = 1).
  CycScalar galois(long k) const;
  /// Norm from Q(zeta_N) to Q, as the determinant of multiplication.
  Rational norm() const;

  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  CycScalar& operator/=(const CycScalar& other);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Literal form, e.g. `3/2*z^2 - 1`, where z is zeta_N of this element's order.
  std::string to_string() const;
  /// Literal form with z read as zeta_order; order must be a multiple of this->order().
  std::string to_string(unsigned order) const;

 private:
  void demote();

  const CyclotomicField* field_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const CycScalar& a) { return a.is_zero(); }
inline std::string to_string(const CycScalar& a) { return a.to_string(); }

/// Total order: lift to a common field, then compare coordinates lexicographically.
int compare(const CycScalar& a, const CycScalar& b);

unsigned lcm_order(unsigned a, unsigned b);

}  // namespace hopfkit
