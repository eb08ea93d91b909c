#include "hopfkit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for p < 2^31 (products fit in 64 bits).

class PrimeField {
 public:
  explicit PrimeField(u64 p) : p_(p) {}

  u64 modulus() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p_ == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
  }
  u64 reduce(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int deg(const ModPoly& a) const { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    if (b.empty()) throw DivisionByZero();
    ModPoly rem = a;
    if (rem.size() < b.size()) return {{}, rem};
    const std::size_t db = b.size() - 1;
    ModPoly quot(rem.size() - db, 0);
    const u64 inv_lead = inv(b.back());
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k] == 0) continue;
      const u64 q = mul(rem[k], inv_lead);
      quot[k - db] = q;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = sub(rem[k - db + j], mul(q, b[j]));
    }
    rem.resize(db);
    trim(rem);
    trim(quot);
    return {quot, rem};
  }
  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const u64 inv_lead = inv(a.back());
    for (u64& c : a) c = mul(c, inv_lead);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), m);
    }
    return result;
  }
  // Returns (g, s, t) with s a + t b = g, g monic.
  std::tuple<ModPoly, ModPoly, ModPoly> ext_gcd(ModPoly a, ModPoly b) const {
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 inv_lead = inv(a.back());
    for (u64& c : a) c = mul(c, inv_lead);
    for (u64& c : s0) c = mul(c, inv_lead);
    for (u64& c : t0) c = mul(c, inv_lead);
    return {a, s0, t0};
  }

 private:
  u64 p_;
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  ++n;
  while (!is_prime(n)) ++n;
  return n;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const PrimeField& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = F.mod(x, f);
  const Integer p(static_cast<unsigned long>(F.modulus()));
  int i = 0;
  while (F.deg(f) >= 2 * (i + 1)) {
    ++i;
    h = F.powmod(h, p, f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (F.deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (F.deg(f) > 0) out.emplace_back(f, F.deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting; p is odd.
void equal_degree(const PrimeField& F, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (F.deg(f) == d) {
    out.push_back(f);
    return;
  }
  const Integer p(static_cast<unsigned long>(F.modulus()));
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ModPoly a(static_cast<std::size_t>(F.deg(f)));
    for (u64& c : a) c = rng() % F.modulus();
    F.trim(a);
    if (F.deg(a) < 1) continue;
    ModPoly g = F.gcd(a, f);
    if (F.deg(g) > 0 && F.deg(g) < F.deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
    ModPoly b = F.powmod(a, e, f);
    g = F.gcd(F.sub(b, ModPoly{1}), f);
    if (F.deg(g) > 0 && F.deg(g) < F.deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x], coefficients kept in [0, m).

void zreduce(ZPoly& a, const Integer& m) {
  for (Integer& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zreduce(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zreduce(r, m);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ModPoly to_mod(const ZPoly& a, const PrimeField& F) {
  ModPoly r;
  r.reserve(a.size());
  for (const Integer& c : a) r.push_back(F.reduce(c));
  F.trim(r);
  return r;
}

// Lift f = g * h (mod p), g and h monic and coprime, to f = G * H (mod p^k)
// with G, H monic. f must be monic modulo p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const ModPoly& g, const ModPoly& h, const PrimeField& F,
                                    unsigned k) {
  const Integer p(static_cast<unsigned long>(F.modulus()));
  auto [one, s, t] = F.ext_gcd(g, h);
  if (F.deg(one) != 0) throw Error("Hensel lifting requires coprime factors");
  ZPoly G = from_mod(g), H = from_mod(h);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    const Integer next = pj * p;
    ZPoly err = zsub(f, zmul(G, H, next), next);
    for (Integer& c : err) c /= pj;  // exact
    ModPoly e = to_mod(err, F);
    if (!e.empty()) {
      // a h + b g = e (mod p) with deg a < deg g, which forces deg b < deg h.
      auto [q, a] = F.divmod(F.mul(t, e), g);
      const ModPoly b = F.add(F.mul(s, e), F.mul(q, h));
      ZPoly A = from_mod(a), B = from_mod(b);
      for (Integer& c : A) c *= pj;
      for (Integer& c : B) c *= pj;
      G.resize(std::max(G.size(), A.size()), 0);
      H.resize(std::max(H.size(), B.size()), 0);
      for (std::size_t i = 0; i < A.size(); ++i) G[i] += A[i];
      for (std::size_t i = 0; i < B.size(); ++i) H[i] += B[i];
      zreduce(G, next);
      zreduce(H, next);
    }
    pj = next;
  }
  return {G, H};
}

// Multifactor lift of monic f (mod p^k) from the monic modular factors.
std::vector<ZPoly> hensel_lift(ZPoly f, const std::vector<ModPoly>& factors, const PrimeField& F, unsigned k) {
  std::vector<ZPoly> out;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = F.mul(rest, factors[j]);
    auto [G, H] = hensel_pair(f, factors[i], rest, F, k);
    out.push_back(std::move(G));
    f = std::move(H);
  }
  out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------

// Primitive integer polynomial with positive leading coefficient, proportional to p.
ZPoly primitive_integer(const Poly<Rational>& p) {
  Integer den = 1;
  for (const Rational& c : p.coeffs()) den = lcm(den, c.get_den());
  ZPoly out;
  Integer content = 0;
  for (const Rational& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (Integer& c : out) c /= content;
  return out;
}

Poly<Rational> to_rational_poly(const ZPoly& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const Integer& c : a) v.emplace_back(c);
  return Poly<Rational>(std::move(v));
}

bool divides(const Poly<Rational>& d, const Poly<Rational>& p) { return (p % d).is_zero(); }

// Factor a primitive squarefree integer polynomial of degree >= 2 into monic rational factors.
std::vector<Poly<Rational>> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Integer lc = f.back();
  const Poly<Rational> target = to_rational_poly(f).monic();

  u64 prime = 1ULL << 30;
  for (int attempt = 0; attempt < 64; ++attempt) {
    prime = next_prime(prime);
    const PrimeField F(prime);
    if (F.reduce(lc) == 0) continue;
    ModPoly fbar = F.monic(to_mod(f, F));
    if (F.deg(F.gcd(fbar, F.derivative(fbar))) != 0) continue;

    std::mt19937_64 rng(prime);
    std::vector<ModPoly> modular;
    for (auto& [part, d] : distinct_degree(F, fbar)) equal_degree(F, part, d, rng, modular);
    std::sort(modular.begin(), modular.end(), [](const ModPoly& a, const ModPoly& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    if (modular.size() == 1) return {target};

    // Coefficients of a monic rational factor have numerators bounded by the
    // Mignotte bound and denominators dividing lc; reconstruction needs m > 2 (B lc)^2.
    Integer norm2 = 0;
    for (const Integer& c : f) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    const Integer needed = 2 * (bound * abs(lc)) * (bound * abs(lc));
    const Integer p(static_cast<unsigned long>(prime));
    unsigned k = 1;
    Integer modulus = p;
    while (modulus <= needed) {
      modulus *= p;
      ++k;
    }

    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly monic_f = f;
    for (Integer& c : monic_f) c *= lc_inv;
    zreduce(monic_f, modulus);
    std::vector<ZPoly> lifted = hensel_lift(monic_f, modular, F, k);

    std::vector<Poly<Rational>> found;
    Poly<Rational> rest = target;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
      bool progress = false;
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        ZPoly prod{1};
        for (std::size_t i : pick) prod = zmul(prod, lifted[remaining[i]], modulus);
        std::vector<Rational> coeffs;
        bool ok = true;
        for (const Integer& c : prod) {
          std::optional<Rational> q = rational_reconstruction(c, modulus);
          if (!q) {
            ok = false;
            break;
          }
          coeffs.push_back(*q);
        }
        if (ok) {
          Poly<Rational> cand(std::move(coeffs));
          if (cand.degree() > 0 && divides(cand, rest)) {
            found.push_back(cand);
            rest = rest / cand;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
              if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
            }
            remaining = std::move(keep);
            progress = true;
            break;
          }
        }
        // next combination
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (!progress) ++size;
    }
    if (rest.degree() > 0) found.push_back(rest);

    Poly<Rational> check = Poly<Rational>::constant(Rational(1));
    for (const auto& g : found) check = check * g;
    if (check == target) return found;
  }
  throw Error("factorization failed at every candidate prime");
}

// Yun's squarefree decomposition of a monic polynomial: pairs (part, multiplicity).
std::vector<std::pair<Poly<Rational>, unsigned>> squarefree_decomposition(const Poly<Rational>& f) {
  std::vector<std::pair<Poly<Rational>, unsigned>> out;
  const Poly<Rational> df = f.derivative();
  Poly<Rational> a = gcd(f, df);
  Poly<Rational> b = f / a;
  Poly<Rational> c = df / a;
  Poly<Rational> d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly<Rational> ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    ++i;
  }
  return out;
}

bool poly_less(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Rational norm_in(const CycScalar& a, unsigned order) {
  const unsigned own = a.order();
  const unsigned exponent = euler_phi(order) / euler_phi(own);
  const Rational base = a.norm();
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::optional<Rational> rational_reconstruction(const Integer& residue, const Integer& modulus) {
  if (modulus <= 1) throw Error("rational reconstruction needs modulus > 1");
  Integer r = residue % modulus;
  if (r < 0) r += modulus;
  // Largest bound with bound^2 <= modulus / 2.
  const Integer bound = sqrt(Integer(modulus / 2));
  // Extended Euclid on (modulus, r), stopping once the remainder drops to the bound.
  Integer r0 = modulus, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

RationalFactorization factor_rational(const Poly<Rational>& p) {
  if (p.is_zero()) throw Error("cannot factor the zero polynomial");
  RationalFactorization out;
  out.unit = p.lead();
  if (p.degree() == 0) return out;
  for (auto& [part, mult] : squarefree_decomposition(p.monic())) {
    std::vector<Poly<Rational>> irreducible;
    if (part.degree() == 1) {
      irreducible.push_back(part);
    } else {
      irreducible = zassenhaus(primitive_integer(part));
    }
    for (auto& g : irreducible) out.factors.push_back({g.monic(), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const RationalFactor& a, const RationalFactor& b) {
    if (a.factor != b.factor) return poly_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

Poly<Rational> norm_polynomial(const Poly<CycScalar>& p, unsigned order) {
  if (p.is_zero()) return {};
  const std::size_t points = static_cast<std::size_t>(p.degree()) * euler_phi(order) + 1;
  std::vector<Rational> coef(points);
  for (std::size_t i = 0; i < points; ++i) coef[i] = norm_in(p(CycScalar(static_cast<long>(i))), order);
  // Newton divided differences on the nodes 0, 1, ..., points - 1.
  for (std::size_t j = 1; j < points; ++j) {
    for (std::size_t i = points - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  }
  Poly<Rational> out = Poly<Rational>::constant(coef[points - 1]);
  for (std::size_t i = points - 1; i-- > 0;) {
    out = out * Poly<Rational>::linear(Rational(static_cast<long>(i))) + Poly<Rational>::constant(coef[i]);
  }
  return out;
}

std::vector<Poly<CycScalar>> factor_over_cyclotomic(const Poly<Rational>& p, unsigned order) {
  if (p.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<Poly<CycScalar>> out;
  if (p.degree() == 0) return out;
  const RationalFactorization rational = factor_rational(p);
  for (const RationalFactor& f : rational.factors) {
    if (f.multiplicity != 1) throw Error("factor_over_cyclotomic requires a squarefree polynomial");
  }
  const bool trivial_extension = euler_phi(order) == 1;
  for (const RationalFactor& f : rational.factors) {
    if (trivial_extension || f.factor.degree() == 1) {
      out.push_back(to_cyclotomic(f.factor));
      continue;
    }
    const Poly<CycScalar> q = to_cyclotomic(f.factor);
    for (long s = 1;; ++s) {
      const CycScalar shift = CycScalar(s) * CycScalar::zeta(order);
      const Poly<CycScalar> shifted = q.shifted(-shift);  // q(x - s zeta)
      const Poly<Rational> norm = norm_polynomial(shifted, order);
      if (!is_squarefree(norm)) continue;
      for (const RationalFactor& r : factor_rational(norm).factors) {
        const Poly<CycScalar> g = gcd(shifted, to_cyclotomic(r.factor));
        if (g.degree() > 0) out.push_back(g.shifted(shift).monic());
      }
      break;
    }
  }
  return out;
}

}  // namespace hopfkit
