#include "hopfkit/builders.hpp"

namespace hopfkit {

HopfData group_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  Tensor3 mult(n), comult(n);
  Vector unit(n), counit(n);
  Matrix<CycScalar> antipode(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult(a, b, g.mul(a, b)) = 1;
    comult(a, a, a) = 1;
    counit[a] = 1;
    antipode(g.inverse[a], a) = 1;
  }
  unit[g.identity] = 1;
  return HopfData("k" + g.name, g.exponent, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                  std::move(antipode));
}

HopfData function_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  Tensor3 mult(n), comult(n);
  Vector unit(n), counit(n);
  Matrix<CycScalar> antipode(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mult(a, a, a) = 1;
    unit[a] = 1;
    for (std::size_t b = 0; b < n; ++b) comult(a, b, g.mul(a, b)) = 1;
    antipode(g.inverse[a], a) = 1;
  }
  counit[g.identity] = 1;
  return HopfData("k^" + g.name, g.exponent, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                  std::move(antipode));
}

HopfData drinfeld_double(const GroupTable& g) {
  const std::size_t n = g.order();
  const std::size_t d = n * n;
  auto idx = [n](std::size_t x, std::size_t h) { return x * n + h; };
  Tensor3 mult(d), comult(d);
  Vector unit(d), counit(d);
  Matrix<CycScalar> antipode(d, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k) {
          if (x == g.conjugate(y, h)) mult(idx(x, h), idx(y, k), idx(x, g.mul(h, k))) = 1;
        }
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = g.mul(g.inverse[a], x);  // a b = x
        comult(idx(a, h), idx(b, h), idx(x, h)) = 1;
      }
      if (x == g.identity) counit[idx(x, h)] = 1;
      const std::size_t hinv = g.inverse[h];
      antipode(idx(g.conjugate(g.inverse[x], hinv), hinv), idx(x, h)) = 1;
    }
  for (std::size_t x = 0; x < n; ++x) unit[idx(x, g.identity)] = 1;
  return HopfData("D(" + g.name + ")", g.exponent, std::move(mult), std::move(unit), std::move(comult),
                  std::move(counit), std::move(antipode));
}

HopfData tensor_product(const HopfData& a, const HopfData& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  auto idx = [db](std::size_t i, std::size_t j) { return i * db + j; };
  Tensor3 mult(d), comult(d);
  Vector unit(d), counit(d);
  Matrix<CycScalar> antipode(d, d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1)
      for (const Term& s : a.product(i1, j1))
        for (std::size_t i2 = 0; i2 < db; ++i2)
          for (std::size_t j2 = 0; j2 < db; ++j2)
            for (const Term& t : b.product(i2, j2)) mult(idx(i1, i2), idx(j1, j2), idx(s.index, t.index)) = s.value * t.value;
  for (std::size_t k1 = 0; k1 < da; ++k1)
    for (std::size_t k2 = 0; k2 < db; ++k2) {
      for (const PairTerm& s : a.coproduct(k1))
        for (const PairTerm& t : b.coproduct(k2))
          comult(idx(s.left, t.left), idx(s.right, t.right), idx(k1, k2)) = s.value * t.value;
      for (const Term& s : a.antipode_of(k1))
        for (const Term& t : b.antipode_of(k2)) antipode(idx(s.index, t.index), idx(k1, k2)) = s.value * t.value;
      unit[idx(k1, k2)] = a.unit()[k1] * b.unit()[k2];
      counit[idx(k1, k2)] = a.counit()[k1] * b.counit()[k2];
    }
  return HopfData(a.name() + "(x)" + b.name(), lcm_order(a.cyclotomic_order(), b.cyclotomic_order()), std::move(mult),
                  std::move(unit), std::move(comult), std::move(counit), std::move(antipode));
}

}  // namespace hopfkit
