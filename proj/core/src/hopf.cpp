#include "hopfkit/hopf.hpp"

#include <map>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

Vector zero_vector(std::size_t dim) { return Vector(dim); }

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = CycScalar(1);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) out[i] += b[i];
  }
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference of different lengths");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) out[i] -= b[i];
  }
  return out;
}

Vector scale(const CycScalar& c, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out[i] = c * a[i];
  }
  return out;
}

bool is_zero(const Vector& a) {
  for (const CycScalar& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const Vector& a, unsigned order) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ", ";
    out << a[i].to_string(order);
  }
  out << ']';
  return out.str();
}

HopfData::HopfData(std::string name, unsigned cyclotomic_order, Tensor3 mult, Vector unit, Tensor3 comult,
                   Vector counit, Matrix<CycScalar> antipode)
    : name_(std::move(name)),
      dim_(mult.dim()),
      order_(cyclotomic_order),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  if (dim_ == 0) throw DimensionMismatch("Hopf algebra dimension must be positive");
  if (order_ == 0) throw DimensionMismatch("cyclotomic order must be positive");
  if (comult_.dim() != dim_ || unit_.size() != dim_ || counit_.size() != dim_ || antipode_.rows() != dim_ ||
      antipode_.cols() != dim_) {
    throw DimensionMismatch("structure tensors of '" + name_ + "' disagree on the dimension " + std::to_string(dim_));
  }
  auto note = [this](const CycScalar& x) {
    if (!x.is_rational()) rational_ = false;
    if (order_ % x.order() != 0) {
      throw DimensionMismatch("structure constant " + x.to_string() + " does not lie in Q(zeta_" +
                              std::to_string(order_) + ")");
    }
  };
  products_.resize(dim_ * dim_);
  coproducts_.resize(dim_);
  antipodes_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const CycScalar& m = mult_(i, j, k);
        if (!m.is_zero()) {
          note(m);
          products_[i * dim_ + j].push_back({k, m});
        }
        const CycScalar& c = comult_(i, j, k);
        if (!c.is_zero()) {
          note(c);
          coproducts_[k].push_back({i, j, c});
        }
      }
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) {
      const CycScalar& s = antipode_(i, j);
      if (!s.is_zero()) {
        note(s);
        antipodes_[j].push_back({i, s});
      }
    }
  for (const CycScalar& x : unit_) note(x);
  for (const CycScalar& x : counit_) note(x);
}

HopfData HopfData::renamed(std::string name) const {
  HopfData out = *this;
  out.name_ = std::move(name);
  return out;
}

bool operator==(const HopfData& a, const HopfData& b) {
  return a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.comult_ == b.comult_ &&
         a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
}

bool AxiomReport::all_pass() const {
  for (const AxiomCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const AxiomCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

using Accum = std::map<std::size_t, CycScalar>;

void accumulate(Accum& acc, std::size_t key, const CycScalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = acc.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) acc.erase(it);
  }
}

bool same(const Accum& a, const Accum& b) { return a == b; }

std::string tuple(std::initializer_list<std::size_t> idx) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) out << ", ";
    first = false;
    out << 'b' << i;
  }
  out << ')';
  return out.str();
}

}  // namespace

AxiomReport check_axioms(const HopfData& h) {
  const std::size_t d = h.dim();
  AxiomReport report;

  // sparse unit
  std::vector<Term> unit_terms;
  for (std::size_t k = 0; k < d; ++k)
    if (!h.unit()[k].is_zero()) unit_terms.push_back({k, h.unit()[k]});

  {
    AxiomCheck c{"associativity", true, ""};
    for (std::size_t i = 0; i < d && c.pass; ++i)
      for (std::size_t j = 0; j < d && c.pass; ++j)
        for (std::size_t l = 0; l < d && c.pass; ++l) {
          Accum lhs, rhs;
          for (const Term& t : h.product(i, j))
            for (const Term& u : h.product(t.index, l)) accumulate(lhs, u.index, t.value * u.value);
          for (const Term& t : h.product(j, l))
            for (const Term& u : h.product(i, t.index)) accumulate(rhs, u.index, t.value * u.value);
          if (!same(lhs, rhs)) {
            c.pass = false;
            c.detail = "(b_i b_j) b_l != b_i (b_j b_l) at " + tuple({i, j, l});
          }
        }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"unit", true, ""};
    for (std::size_t j = 0; j < d && c.pass; ++j) {
      Accum left, right, expect;
      accumulate(expect, j, CycScalar(1));
      for (const Term& u : unit_terms) {
        for (const Term& t : h.product(u.index, j)) accumulate(left, t.index, u.value * t.value);
        for (const Term& t : h.product(j, u.index)) accumulate(right, t.index, u.value * t.value);
      }
      if (!same(left, expect) || !same(right, expect)) {
        c.pass = false;
        c.detail = "1 b_j = b_j = b_j 1 fails at " + tuple({j});
      }
    }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"coassociativity", true, ""};
    for (std::size_t k = 0; k < d && c.pass; ++k) {
      Accum lhs, rhs;
      for (const PairTerm& t : h.coproduct(k)) {
        for (const PairTerm& u : h.coproduct(t.left))
          accumulate(lhs, (u.left * d + u.right) * d + t.right, t.value * u.value);
        for (const PairTerm& u : h.coproduct(t.right))
          accumulate(rhs, (t.left * d + u.left) * d + u.right, t.value * u.value);
      }
      if (!same(lhs, rhs)) {
        c.pass = false;
        c.detail = "(Delta (x) id) Delta != (id (x) Delta) Delta at " + tuple({k});
      }
    }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"counit", true, ""};
    for (std::size_t k = 0; k < d && c.pass; ++k) {
      Accum left, right, expect;
      accumulate(expect, k, CycScalar(1));
      for (const PairTerm& t : h.coproduct(k)) {
        accumulate(left, t.right, t.value * h.counit()[t.left]);
        accumulate(right, t.left, t.value * h.counit()[t.right]);
      }
      if (!same(left, expect) || !same(right, expect)) {
        c.pass = false;
        c.detail = "(eps (x) id) Delta = id = (id (x) eps) Delta fails at " + tuple({k});
      }
    }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"comultiplication is an algebra map", true, ""};
    {
      Accum lhs, expect;
      for (const Term& u : unit_terms)
        for (const PairTerm& t : h.coproduct(u.index)) accumulate(lhs, t.left * d + t.right, u.value * t.value);
      for (const Term& u : unit_terms)
        for (const Term& w : unit_terms) accumulate(expect, u.index * d + w.index, u.value * w.value);
      if (!same(lhs, expect)) {
        c.pass = false;
        c.detail = "Delta(1) != 1 (x) 1";
      }
    }
    for (std::size_t i = 0; i < d && c.pass; ++i)
      for (std::size_t j = 0; j < d && c.pass; ++j) {
        Accum lhs, rhs;
        for (const Term& t : h.product(i, j))
          for (const PairTerm& u : h.coproduct(t.index)) accumulate(lhs, u.left * d + u.right, t.value * u.value);
        for (const PairTerm& x : h.coproduct(i))
          for (const PairTerm& y : h.coproduct(j)) {
            const CycScalar coef = x.value * y.value;
            for (const Term& l : h.product(x.left, y.left))
              for (const Term& r : h.product(x.right, y.right))
                accumulate(rhs, l.index * d + r.index, coef * l.value * r.value);
          }
        if (!same(lhs, rhs)) {
          c.pass = false;
          c.detail = "Delta(b_i b_j) != Delta(b_i) Delta(b_j) at " + tuple({i, j});
        }
      }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"counit is an algebra map", true, ""};
    CycScalar eps_one;
    for (const Term& u : unit_terms) eps_one += u.value * h.counit()[u.index];
    if (!eps_one.is_one()) {
      c.pass = false;
      c.detail = "eps(1) != 1";
    }
    for (std::size_t i = 0; i < d && c.pass; ++i)
      for (std::size_t j = 0; j < d && c.pass; ++j) {
        CycScalar lhs;
        for (const Term& t : h.product(i, j)) lhs += t.value * h.counit()[t.index];
        if (lhs != h.counit()[i] * h.counit()[j]) {
          c.pass = false;
          c.detail = "eps(b_i b_j) != eps(b_i) eps(b_j) at " + tuple({i, j});
        }
      }
    report.checks.push_back(c);
  }
  {
    AxiomCheck c{"antipode", true, ""};
    for (std::size_t k = 0; k < d && c.pass; ++k) {
      Accum left, right, expect;
      for (const Term& u : unit_terms) accumulate(expect, u.index, h.counit()[k] * u.value);
      for (const PairTerm& t : h.coproduct(k)) {
        for (const Term& s : h.antipode_of(t.left))
          for (const Term& p : h.product(s.index, t.right)) accumulate(left, p.index, t.value * s.value * p.value);
        for (const Term& s : h.antipode_of(t.right))
          for (const Term& p : h.product(t.left, s.index)) accumulate(right, p.index, t.value * s.value * p.value);
      }
      if (!same(left, expect) || !same(right, expect)) {
        c.pass = false;
        c.detail = "S(h_(1)) h_(2) = eps(h) 1 = h_(1) S(h_(2)) fails at " + tuple({k});
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

HopfData dualize(const HopfData& h) {
  const std::size_t d = h.dim();
  Tensor3 mult(d), comult(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        mult(i, j, k) = h.comult()(i, j, k);
        comult(i, j, k) = h.mult()(i, j, k);
      }
  std::string name = h.name();
  if (name.size() > 1 && name.back() == '*') {
    name.pop_back();
  } else {
    name += "*";
  }
  return HopfData(std::move(name), h.cyclotomic_order(), std::move(mult), h.counit(), std::move(comult), h.unit(),
                  h.antipode().transpose());
}

CycScalar pair(const Vector& phi, const Vector& h) {
  if (phi.size() != h.size()) throw DimensionMismatch("pairing vectors of different lengths");
  CycScalar out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!phi[i].is_zero() && !h[i].is_zero()) out += phi[i] * h[i];
  }
  return out;
}

namespace {

void require_dim(const HopfData& hopf, const Vector& v, const char* what) {
  if (v.size() != hopf.dim()) {
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                            std::to_string(hopf.dim()));
  }
}

}  // namespace

Vector multiply(const HopfData& hopf, const Vector& x, const Vector& y) {
  require_dim(hopf, x, "left factor");
  require_dim(hopf, y, "right factor");
  const std::size_t d = hopf.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const CycScalar c = x[i] * y[j];
      for (const Term& t : hopf.product(i, j)) out[t.index] += c * t.value;
    }
  }
  return out;
}

Vector apply_antipode(const HopfData& hopf, const Vector& x) {
  require_dim(hopf, x, "antipode argument");
  Vector out(hopf.dim());
  for (std::size_t j = 0; j < hopf.dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (const Term& t : hopf.antipode_of(j)) out[t.index] += x[j] * t.value;
  }
  return out;
}

Vector dual_antipode(const HopfData& hopf, const Vector& phi) {
  require_dim(hopf, phi, "dual antipode argument");
  // (S* phi)(b_j) = phi(S b_j)
  Vector out(hopf.dim());
  for (std::size_t j = 0; j < hopf.dim(); ++j) {
    for (const Term& t : hopf.antipode_of(j)) {
      if (!phi[t.index].is_zero()) out[j] += phi[t.index] * t.value;
    }
  }
  return out;
}

Vector convolve(const Vector& phi, const Vector& psi, const HopfData& hopf) {
  require_dim(hopf, phi, "left convolution factor");
  require_dim(hopf, psi, "right convolution factor");
  Vector out(hopf.dim());
  for (std::size_t k = 0; k < hopf.dim(); ++k) {
    for (const PairTerm& t : hopf.coproduct(k)) {
      if (phi[t.left].is_zero() || psi[t.right].is_zero()) continue;
      out[k] += t.value * phi[t.left] * psi[t.right];
    }
  }
  return out;
}

Vector hit_act_alg_on_dual(const Vector& h, const Vector& phi, const HopfData& hopf) {
  require_dim(hopf, h, "acting element");
  require_dim(hopf, phi, "dual vector");
  const std::size_t d = hopf.dim();
  // <h.phi, b_l> = sum_j h_j <phi, b_l b_j>
  Vector out(d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t j = 0; j < d; ++j) {
      if (h[j].is_zero()) continue;
      for (const Term& t : hopf.product(l, j)) {
        if (!phi[t.index].is_zero()) out[l] += h[j] * t.value * phi[t.index];
      }
    }
  }
  return out;
}

Vector hit_act_dual_on_alg(const Vector& phi, const Vector& h, const HopfData& hopf) {
  require_dim(hopf, phi, "acting dual vector");
  require_dim(hopf, h, "algebra element");
  Vector out(hopf.dim());
  for (std::size_t k = 0; k < hopf.dim(); ++k) {
    if (h[k].is_zero()) continue;
    for (const PairTerm& t : hopf.coproduct(k)) {
      if (phi[t.right].is_zero()) continue;
      out[t.left] += h[k] * t.value * phi[t.right];
    }
  }
  return out;
}

Matrix<CycScalar> left_multiplication(const HopfData& hopf, const Vector& x) {
  require_dim(hopf, x, "multiplier");
  const std::size_t d = hopf.dim();
  Matrix<CycScalar> m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const Term& t : hopf.product(i, j)) m(t.index, j) += x[i] * t.value;
  }
  return m;
}

}  // namespace hopfkit
