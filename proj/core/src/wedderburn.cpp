#include "hopfkit/wedderburn.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/factor.hpp"

namespace hopfkit {

std::vector<Vector> center(const HopfData& h) {
  const std::size_t d = h.dim();
  // Row (i, k): sum_j z_j (mult(j, i, k) - mult(i, j, k)) = 0.
  Matrix<CycScalar> system(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const Term& t : h.product(j, i)) system(i * d + t.index, j) += t.value;
      for (const Term& t : h.product(i, j)) system(i * d + t.index, j) -= t.value;
    }
  return kernel_basis(system);
}

namespace {

// Minimal polynomial of w inside the ring eH with unit e.
Poly<Rational> min_poly_in(const HopfData& h, const Vector& w, const Vector& e) {
  std::vector<Vector> powers{e};
  Vector pw = w;
  while (true) {
    if (const auto c = coordinates<CycScalar>(std::span<const Vector>(powers), pw)) {
      std::vector<Rational> coeffs(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -(*c)[i].rational();
      coeffs.back() = 1;
      return Poly<Rational>(std::move(coeffs));
    }
    powers.push_back(pw);
    pw = multiply(h, pw, w);
  }
}

// p(w) in eH by Horner's scheme.
template <class T>
Vector evaluate_at(const HopfData& h, const Poly<T>& p, const Vector& w, const Vector& e) {
  Vector acc(h.dim());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = add(multiply(h, acc, w), scale(CycScalar(p.coeffs()[i]), e));
  }
  return acc;
}

// a^-1 mod f for coprime a, f.
Poly<Rational> inverse_mod(const Poly<Rational>& a, const Poly<Rational>& f) {
  Poly<Rational> r0 = f, r1 = a % f;
  Poly<Rational> s0, s1 = Poly<Rational>::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<Rational> s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw VerificationFailure("block polynomials are not coprime");
  return (Rational(1) / r1.coeffs()[0]) * s1 % f;
}

std::size_t block_dimension(const HopfData& h, const Vector& e, const std::vector<Vector>& center_basis) {
  std::vector<Vector> cols;
  for (const Vector& c : center_basis) cols.push_back(multiply(h, e, c));
  return rank(Matrix<CycScalar>::from_columns(std::span<const Vector>(cols), h.dim()));
}

// A rational central idempotent e with dim eZ(H) = dim; `done` once w generates eZ(H) as a field.
struct RationalBlock {
  Vector e;
  std::size_t dim;
  bool done = false;
  Vector w;
  Poly<Rational> f;
};

bool vector_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<unsigned> block_degrees(const HopfData& h, std::span<const Vector> idempotents) {
  const std::size_t d = h.dim();
  // trace(L_{b_j}) = sum_i mult(j, i, i)
  Vector basis_trace(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      const CycScalar& m = h.mult()(j, i, i);
      if (!m.is_zero()) basis_trace[j] += m;
    }
  std::vector<unsigned> out;
  for (const Vector& e : idempotents) {
    const CycScalar t = pair(e, basis_trace);
    Integer root;
    if (!t.is_rational() || !is_integer(t.rational()) || !exact_sqrt(t.rational().get_num(), root)) {
      throw VerificationFailure("non-square block trace " + t.to_string());
    }
    out.push_back(static_cast<unsigned>(root.get_ui()));
  }
  return out;
}

std::vector<Check> verify_blocks(const HopfData& h, std::span<const Vector> idempotents,
                                 std::span<const unsigned> degrees) {
  const std::size_t d = h.dim();
  std::vector<Check> checks;
  {
    Check c{"orthogonal idempotents", true, ""};
    for (std::size_t i = 0; i < idempotents.size() && c.pass; ++i)
      for (std::size_t j = 0; j < idempotents.size() && c.pass; ++j) {
        const Vector prod = multiply(h, idempotents[i], idempotents[j]);
        const bool ok = i == j ? prod == idempotents[i] : is_zero(prod);
        if (!ok) {
          c.pass = false;
          c.detail = "e_" + std::to_string(i + 1) + " e_" + std::to_string(j + 1) + " wrong";
        }
      }
    checks.push_back(c);
  }
  {
    Vector sum(d);
    for (const Vector& e : idempotents) sum = add(sum, e);
    checks.push_back({"idempotents sum to 1", sum == h.unit(), sum == h.unit() ? "" : "sum != 1"});
  }
  {
    Check c{"idempotents are central", true, ""};
    for (std::size_t i = 0; i < idempotents.size() && c.pass; ++i)
      for (std::size_t k = 0; k < d && c.pass; ++k) {
        const Vector b = basis_vector(d, k);
        if (multiply(h, idempotents[i], b) != multiply(h, b, idempotents[i])) {
          c.pass = false;
          c.detail = "e_" + std::to_string(i + 1) + " does not commute with b" + std::to_string(k);
        }
      }
    checks.push_back(c);
  }
  {
    unsigned long total = 0;
    for (unsigned deg : degrees) total += static_cast<unsigned long>(deg) * deg;
    checks.push_back({"sum of squared degrees equals dim H", total == d,
                      "sum = " + std::to_string(total) + ", dim = " + std::to_string(d)});
  }
  return checks;
}

BlockDecomposition primitive_idempotents(const HopfData& h, unsigned order, std::uint64_t seed,
                                         const std::string& label_prefix) {
  if (!h.is_rational()) throw Error("splitting " + h.name() + " requires rational structure constants");
  BlockDecomposition out;
  out.cyclotomic_order = order;
  out.center_basis = center(h);
  const std::size_t m = out.center_basis.size();

  std::mt19937_64 rng(seed);
  std::vector<RationalBlock> rational{{h.unit(), m, false, {}, {}}};
  const auto all_done = [&] {
    return std::all_of(rational.begin(), rational.end(), [](const RationalBlock& b) { return b.done; });
  };
  while (!all_done()) {
    if (out.attempts == kSplittingRetries) {
      throw RetriesExhausted("no splitting of the center of " + h.name() + " after " +
                             std::to_string(kSplittingRetries) + " draws");
    }
    ++out.attempts;
    Vector z(h.dim());
    for (const Vector& c : out.center_basis) {
      const long coef = static_cast<long>(rng() % 7) - 3;
      if (coef != 0) z = add(z, scale(CycScalar(coef), c));
    }
    bool progress = false;
    std::vector<RationalBlock> next;
    for (RationalBlock& b : rational) {
      if (b.done) {
        next.push_back(std::move(b));
        continue;
      }
      const Vector w = multiply(h, z, b.e);
      const Poly<Rational> p = min_poly_in(h, w, b.e);
      if (!is_squarefree(p)) throw NotSemisimple("the center of " + h.name() + " has nilpotent elements");
      const RationalFactorization fac = factor_rational(p);
      if (fac.factors.size() == 1) {
        if (static_cast<std::size_t>(p.degree()) == b.dim) {
          b = {b.e, b.dim, true, w, p};
          progress = true;
        }
        next.push_back(std::move(b));
        continue;
      }
      progress = true;
      for (const RationalFactor& rf : fac.factors) {
        const Poly<Rational> g = p / rf.factor;
        const Vector e = evaluate_at(h, g * inverse_mod(g, rf.factor) % p, w, b.e);
        RationalBlock nb{e, block_dimension(h, e, out.center_basis), false, {}, {}};
        if (static_cast<std::size_t>(rf.factor.degree()) == nb.dim) {
          nb.done = true;
          nb.w = multiply(h, w, e);
          nb.f = rf.factor;
        }
        next.push_back(std::move(nb));
      }
    }
    rational = std::move(next);
    if (progress) out.splitting_elements.push_back(z);
  }

  struct Block {
    Vector e;
    CycScalar mu;
    Poly<Rational> f;
  };
  std::vector<Block> blocks;
  for (const RationalBlock& b : rational) {
    if (b.f.degree() == 1) {
      blocks.push_back({b.e, CycScalar(-b.f.coeffs()[0]), b.f});
      continue;
    }
    const Poly<CycScalar> fk = to_cyclotomic(b.f);
    for (const Poly<CycScalar>& lin : factor_over_cyclotomic(b.f, order)) {
      if (lin.degree() != 1) {
        throw FieldTooSmall("the eigenvalue polynomial " + b.f.to_string() + " of " + h.name() +
                            " does not split over Q(zeta_" + std::to_string(order) +
                            "); increase the cyclotomic order");
      }
      const CycScalar mu = -lin.coeffs()[0];
      const Poly<CycScalar> q = fk / Poly<CycScalar>::linear(mu);
      blocks.push_back({scale(q(mu).inverse(), evaluate_at(h, q, b.w, b.e)), mu, b.f});
    }
  }

  std::vector<Vector> idem;
  for (const Block& b : blocks) idem.push_back(b.e);
  const std::vector<unsigned> degs = block_degrees(h, idem);

  std::vector<std::size_t> perm(blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return vector_less(blocks[a].e, blocks[b].e);
  });
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.idempotents.push_back(blocks[perm[i]].e);
    out.eigenvalues.push_back(blocks[perm[i]].mu);
    out.field_polynomials.push_back(blocks[perm[i]].f);
    out.degrees.push_back(degs[perm[i]]);
    out.labels.push_back(label_prefix + std::to_string(i + 1));
  }

  out.checks = verify_blocks(h, out.idempotents, out.degrees);
  out.checks.insert(out.checks.begin(), Check{"block count equals dim Z(H)", out.idempotents.size() == m,
                                              std::to_string(out.idempotents.size()) + " blocks, dim Z = " +
                                                  std::to_string(m)});
  for (const Check& c : out.checks) {
    if (!c.pass) throw VerificationFailure(h.name() + ": " + c.name + " failed: " + c.detail);
  }
  return out;
}

}  // namespace hopfkit
