#include "hopfkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

const CyclotomicField& rational_field() {
  static const CyclotomicField& field = CyclotomicField::get(1);
  return field;
}

long to_long_checked(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("cyclotomic reduction coefficient overflows a machine word");
  return z.get_si();
}

// Dense Gaussian elimination on a small square rational system; returns the
// determinant and, when rhs is non-null and the matrix is invertible, solves in place.
Rational eliminate(std::vector<std::vector<Rational>> m, std::vector<Rational>* rhs) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      if (rhs) std::swap((*rhs)[pivot], (*rhs)[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    if (rhs) (*rhs)[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      if (rhs) (*rhs)[r] -= f * (*rhs)[col];
    }
  }
  return det;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Integer> div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const Integer c = num[k];  // divisor is monic
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

const CyclotomicField& CyclotomicField::get(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
  if (order == 0) throw Error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(order);
  if (it == registry.end()) {
    it = registry.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  }
  return *it->second;
}

CyclotomicField::CyclotomicField(unsigned order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
  powers_.reserve(order);
  std::vector<Integer> current(degree_, 0);
  current[0] = 1;
  for (unsigned k = 0; k < order; ++k) {
    std::vector<long> row(degree_);
    for (std::size_t i = 0; i < degree_; ++i) row[i] = to_long_checked(current[i]);
    powers_.push_back(std::move(row));
    // multiply by x and reduce with the monic modulus
    Integer top = current[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < degree_; ++i) current[i] -= top * modulus_[i];
    }
  }
}

const std::vector<long>& CyclotomicField::power(long k) const {
  long r = k % static_cast<long>(order_);
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

CycScalar::CycScalar() : field_(&rational_field()), coords_(1) {}

CycScalar::CycScalar(long value) : field_(&rational_field()), coords_{Rational(value)} {}

CycScalar::CycScalar(const Rational& value) : field_(&rational_field()), coords_{value} {}

CycScalar::CycScalar(unsigned order, std::vector<Rational> coords)
    : field_(&CyclotomicField::get(order)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree()) {
    throw DimensionMismatch("cyclotomic coordinate vector of length " + std::to_string(coords_.size()) +
                            " for order " + std::to_string(order));
  }
  demote();
}

CycScalar CycScalar::zeta(unsigned order, long k) {
  const CyclotomicField& f = CyclotomicField::get(order);
  const std::vector<long>& p = f.power(k);
  return CycScalar(order, std::vector<Rational>(p.begin(), p.end()));
}

void CycScalar::demote() {
  if (coords_.size() == 1) {
    field_ = &rational_field();
    return;
  }
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return;
  }
  coords_.resize(1);
  field_ = &rational_field();
}

const Rational& CycScalar::rational() const {
  if (!is_rational()) throw Error("cyclotomic element " + to_string() + " is not rational");
  return coords_[0];
}

std::vector<Rational> CycScalar::coords_in(unsigned order) const {
  const unsigned own = field_->order();
  if (order % own != 0) {
    throw Error("cannot lift an element of Q(zeta_" + std::to_string(own) + ") to Q(zeta_" + std::to_string(order) + ")");
  }
  const CyclotomicField& target = CyclotomicField::get(order);
  std::vector<Rational> out(target.degree());
  if (is_rational()) {
    out[0] = coords_[0];
    return out;
  }
  const long step = order / own;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) continue;
    const std::vector<long>& p = target.power(static_cast<long>(i) * step);
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (p[t] != 0) out[t] += coords_[i] * p[t];
    }
  }
  return out;
}

CycScalar CycScalar::lifted(unsigned order) const { return CycScalar(order, coords_in(order)); }

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  if (other.is_rational()) {
    coords_[0] += other.coords_[0];
    if (is_rational()) return *this;
    demote();
    return *this;
  }
  if (is_rational()) {
    const Rational c = coords_[0];
    *this = other;
    coords_[0] += c;
    return *this;
  }
  if (field_ != other.field_) {
    const unsigned l = lcm_order(order(), other.order());
    coords_ = coords_in(l);
    field_ = &CyclotomicField::get(l);
    std::vector<Rational> rhs = other.coords_in(l);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs[i];
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  }
  demote();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) { return *this += -other; }

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (Rational& c : out.coords_) c = -c;
  return out;
}

CycScalar& CycScalar::operator*=(const CycScalar& other) {
  if (other.is_rational()) {
    const Rational c = other.coords_[0];
    if (sgn(c) == 0) {
      *this = CycScalar();
      return *this;
    }
    for (Rational& x : coords_) x *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = coords_[0];
    *this = other;
    if (sgn(c) == 0) {
      *this = CycScalar();
      return *this;
    }
    for (Rational& x : coords_) x *= c;
    return *this;
  }
  std::vector<Rational> lhs, rhs;
  const CyclotomicField* f = field_;
  if (field_ != other.field_) {
    const unsigned l = lcm_order(order(), other.order());
    lhs = coords_in(l);
    rhs = other.coords_in(l);
    f = &CyclotomicField::get(l);
  } else {
    lhs = coords_;
    rhs = other.coords_;
  }
  const std::size_t n = f->degree();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lhs[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(rhs[j]) == 0) continue;
      prod[i + j] += lhs[i] * rhs[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const std::vector<long>& p = f->power(static_cast<long>(k));
    for (std::size_t t = 0; t < n; ++t) {
      if (p[t] != 0) out[t] += prod[k] * p[t];
    }
  }
  field_ = f;
  coords_ = std::move(out);
  demote();
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& other) { return *this *= other.inverse(); }

namespace {

// Column i holds the coordinates of a * zeta^i.
std::vector<std::vector<Rational>> multiplication_matrix(const CycScalar& a) {
  const unsigned order = a.order();
  const std::size_t n = a.field().degree();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const CycScalar col = a * CycScalar::zeta(order, static_cast<long>(i));
    const std::vector<Rational> c = col.coords_in(order);
    for (std::size_t r = 0; r < n; ++r) m[r][i] = c[r];
  }
  return m;
}

}  // namespace

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycScalar(Rational(1 / coords_[0]));
  std::vector<Rational> rhs(coords_.size());
  rhs[0] = 1;
  const Rational det = eliminate(multiplication_matrix(*this), &rhs);
  if (sgn(det) == 0) throw DivisionByZero();
  return CycScalar(order(), std::move(rhs));
}

Rational CycScalar::norm() const {
  if (is_rational()) return coords_[0];
  return eliminate(multiplication_matrix(*this), nullptr);
}

CycScalar CycScalar::galois(long k) const {
  if (is_rational()) return *this;
  const unsigned n = order();
  if (std::gcd(static_cast<long>(n), k) != 1) throw Error("Galois exponent must be coprime to the order");
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) continue;
    const std::vector<long>& p = field_->power(static_cast<long>(i) * k);
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (p[t] != 0) out[t] += coords_[i] * p[t];
    }
  }
  return CycScalar(n, std::move(out));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.coords_[0] == b.coords_[0];
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  const unsigned l = lcm_order(a.order(), b.order());
  return a.coords_in(l) == b.coords_in(l);
}

int compare(const CycScalar& a, const CycScalar& b) {
  const unsigned l = lcm_order(a.order(), b.order());
  const std::vector<Rational> x = a.coords_in(l);
  const std::vector<Rational> y = b.coords_in(l);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycScalar::to_string() const { return to_string(order()); }

std::string CycScalar::to_string(unsigned order) const {
  const std::vector<Rational> c = coords_in(order);
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    const Rational mag = negative ? Rational(-c[k]) : c[k];
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace hopfkit
