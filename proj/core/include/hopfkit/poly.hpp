#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/rational.hpp"

namespace hopfkit {

/// Dense univariate polynomial over a field, coefficients stored low to high.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t n) {
    std::vector<T> v(n + 1, T(0));
    v[n] = c;
    return Poly(std::move(v));
  }
  /// x - root
  static Poly linear(const T& root) { return Poly(std::vector<T>{-root, T(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    const T inv = T(1) / c_.back();
    std::vector<T> v(c_);
    for (T& x : v) x = x * inv;
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(v));
  }

  /// p(x + shift)
  Poly shifted(const T& shift) const {
    Poly acc;
    const Poly lin(std::vector<T>{shift, T(1)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly::constant(c_[i]);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    std::vector<T> v(c_);
    for (T& x : v) x = -x;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (hopfkit::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (hopfkit::is_zero(b.c_[j])) continue;
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> v(p.c_);
    for (T& x : v) x = s * x;
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; throws on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<T> rem(a.c_);
    if (a.degree() < b.degree()) return {Poly(), a};
    const std::size_t db = b.c_.size() - 1;
    std::vector<T> quot(rem.size() - db, T(0));
    const T inv = T(1) / b.c_.back();
    for (std::size_t k = rem.size(); k-- > db;) {
      if (hopfkit::is_zero(rem[k])) continue;
      const T q = rem[k] * inv;
      quot[k - db] = q;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - q * b.c_[j];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Human-readable form, high degree first.
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (hopfkit::is_zero(c_[k])) continue;
      std::string s = hopfkit::to_string(c_[k]);
      const bool compound = s.find_first_of("+ ", 1) != std::string::npos;
      if (!first) {
        if (!compound && s[0] == '-') {
          out << " - ";
          s.erase(0, 1);
        } else {
          out << " + ";
        }
      }
      first = false;
      if (k == 0) {
        out << (compound ? "(" + s + ")" : s);
        continue;
      }
      if (s == "-1") {
        out << '-';
      } else if (s != "1") {
        out << (compound ? "(" + s + ")" : s) << '*';
      }
      out << var;
      if (k > 1) out << '^' << k;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && hopfkit::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
bool is_squarefree(const Poly<T>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

/// Lift a rational polynomial into Q(zeta_N)[x].
inline Poly<CycScalar> to_cyclotomic(const Poly<Rational>& p) {
  std::vector<CycScalar> v;
  v.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) v.emplace_back(c);
  return Poly<CycScalar>(std::move(v));
}

}  // namespace hopfkit
