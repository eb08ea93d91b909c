#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Coordinates of an element of H, or of a linear form in the dual basis of H*.
using Vector = std::vector<CycScalar>;

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const CycScalar& c, const Vector& a);
bool is_zero(const Vector& a);
std::string to_string(const Vector& a, unsigned order);

/// Dense cubic tensor t(i, j, k), i, j, k < dim.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  CycScalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const CycScalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<CycScalar> data_;
};

struct Term {
  std::size_t index;
  CycScalar value;
};

struct PairTerm {
  std::size_t left;
  std::size_t right;
  CycScalar value;
};

/// A finite-dimensional Hopf algebra given by structure constants in a basis b_0..b_{d-1}:
///
///   b_i b_j = sum_k mult(i, j, k) b_k          1 = sum_k unit[k] b_k
///   Delta(b_k) = sum_{i,j} comult(i, j, k) b_i (x) b_j        eps(b_k) = counit[k]
///   S(b_j) = sum_i antipode(i, j) b_i
///
/// Immutable after construction. Sparse views of the three structure maps are
/// precomputed so contractions only touch nonzero constants.
class HopfData {
 public:
  HopfData(std::string name, unsigned cyclotomic_order, Tensor3 mult, Vector unit, Tensor3 comult, Vector counit,
           Matrix<CycScalar> antipode);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  /// The scalars live in Q(zeta_N) for this N.
  unsigned cyclotomic_order() const noexcept { return order_; }

  const Tensor3& mult() const noexcept { return mult_; }
  const Vector& unit() const noexcept { return unit_; }
  const Tensor3& comult() const noexcept { return comult_; }
  const Vector& counit() const noexcept { return counit_; }
  const Matrix<CycScalar>& antipode() const noexcept { return antipode_; }

  /// b_i b_j as a sparse vector.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  /// Delta(b_k) as a sparse list of tensor terms.
  const std::vector<PairTerm>& coproduct(std::size_t k) const { return coproducts_[k]; }
  /// S(b_j) as a sparse vector.
  const std::vector<Term>& antipode_of(std::size_t j) const { return antipodes_[j]; }

  /// All structure constants are rational.
  bool is_rational() const noexcept { return rational_; }

  HopfData renamed(std::string name) const;

  /// Same structure constants (names are ignored).
  friend bool operator==(const HopfData& a, const HopfData& b);

 private:
  std::string name_;
  std::size_t dim_;
  unsigned order_;
  Tensor3 mult_;
  Vector unit_;
  Tensor3 comult_;
  Vector counit_;
  Matrix<CycScalar> antipode_;
  std::vector<std::vector<Term>> products_;
  std::vector<std::vector<PairTerm>> coproducts_;
  std::vector<std::vector<Term>> antipodes_;
  bool rational_ = true;
};

/// One named exact check with a short diagnostic.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing basis tuple, empty on success
};
using AxiomCheck = Check;

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Exhaustive exact check of the Hopf algebra axioms over all basis tuples.
AxiomReport check_axioms(const HopfData& h);

/// H* in the dual basis: the multiplication and comultiplication tensors are
/// exchanged, unit and counit are exchanged, and the antipode is transposed.
HopfData dualize(const HopfData& h);

/// <phi, h>
CycScalar pair(const Vector& phi, const Vector& h);

/// Product in H.
Vector multiply(const HopfData& hopf, const Vector& x, const Vector& y);
/// S(x)
Vector apply_antipode(const HopfData& hopf, const Vector& x);
/// S*(phi) = phi o S, the antipode of H*.
Vector dual_antipode(const HopfData& hopf, const Vector& phi);

/// Product of H*: (phi psi)(h) = sum phi(h_(1)) psi(h_(2)).
Vector convolve(const Vector& phi, const Vector& psi, const HopfData& hopf);

/// h.phi with <h.phi, h'> = <phi, h' h>.
Vector hit_act_alg_on_dual(const Vector& h, const Vector& phi, const HopfData& hopf);

/// phi.h = sum h_(1) <phi, h_(2)>, so that <psi, phi.h> = <psi phi, h>.
Vector hit_act_dual_on_alg(const Vector& phi, const Vector& h, const HopfData& hopf);

/// Left-multiplication matrix of x on H (column j = x b_j).
Matrix<CycScalar> left_multiplication(const HopfData& hopf, const Vector& x);

}  // namespace hopfkit
