#include "hopfkit/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hopfkit/error.hpp"

namespace hopfkit {

bool VerificationReport::passed() const {
  return std::none_of(items.begin(), items.end(), [](const ReportItem& i) { return i.status == ItemStatus::fail; });
}

bool ReportDocument::overall() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const VerificationReport& s) { return s.exploratory || s.passed(); });
}

namespace {

std::vector<std::string> literals(const Vector& v, unsigned order) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const CycScalar& c : v) out.push_back(c.to_string(order));
  return out;
}

ItemStatus status_of(bool ok) { return ok ? ItemStatus::pass : ItemStatus::fail; }

VerificationReport new_report(const HopfData& h, std::string suite) {
  VerificationReport r;
  r.algebra = h.name();
  r.dim = h.dim();
  r.suite = std::move(suite);
  return r;
}

// Runs `body`, turning a library error into a failing item so suites never abort.
template <class F>
void add_item(VerificationReport& report, std::string id, std::string statement, F&& body) {
  ReportItem item{std::move(id), std::move(statement), ItemStatus::fail, {}};
  try {
    item.status = body(item.witness);
  } catch (const Error& e) {
    item.status = ItemStatus::fail;
    item.witness.emplace_back("error", std::string(e.what()));
  }
  report.items.push_back(std::move(item));
}

std::string slug(const std::string& name) {
  std::string s;
  for (char c : name) s += c == ' ' ? '-' : c;
  return s;
}

CycScalar from_long(std::size_t n) { return CycScalar(static_cast<long>(n)); }

}  // namespace

VerificationReport verify_axioms(const HopfData& h, unsigned order) {
  (void)order;
  VerificationReport report = new_report(h, "axioms");
  const AxiomReport axioms = check_axioms(h);
  for (const AxiomCheck& c : axioms.checks) {
    add_item(report, "axioms." + slug(c.name), c.name + " holds on all basis tuples", [&](Witness& w) {
      if (!c.pass) w.emplace_back("first_failure", c.detail);
      return status_of(c.pass);
    });
  }
  return report;
}

VerificationReport verify_integrals(const HopfData& h, const IntegralPair& in, unsigned order) {
  VerificationReport report = new_report(h, "integrals");
  const std::size_t d = h.dim();
  add_item(report, "integrals.lambda-at-unit", "<lambda, 1> = 1", [&](Witness& w) {
    const CycScalar v = pair(in.dual_integral, h.unit());
    w.emplace_back("lambda", literals(in.dual_integral, order));
    w.emplace_back("value", v.to_string(order));
    return status_of(v.is_one());
  });
  add_item(report, "integrals.pairing", "<lambda, Lambda> = 1", [&](Witness& w) {
    const CycScalar v = pair(in.dual_integral, in.integral);
    w.emplace_back("Lambda", literals(in.integral, order));
    w.emplace_back("value", v.to_string(order));
    return status_of(v.is_one());
  });
  add_item(report, "integrals.counit-of-Lambda", "<eps, Lambda> = dim H", [&](Witness& w) {
    const CycScalar v = pair(h.counit(), in.integral);
    w.emplace_back("value", v.to_string(order));
    w.emplace_back("dim", static_cast<long>(d));
    return status_of(v == from_long(d));
  });
  add_item(report, "integrals.left-integral", "h Lambda = eps(h) Lambda for every basis element h", [&](Witness& w) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vector lhs = multiply(h, basis_vector(d, i), in.integral);
      if (lhs != scale(h.counit()[i], in.integral)) {
        w.emplace_back("basis_index", static_cast<long>(i));
        w.emplace_back("product", literals(lhs, order));
        return ItemStatus::fail;
      }
    }
    return ItemStatus::pass;
  });
  add_item(report, "integrals.right-integral", "Lambda h = eps(h) Lambda for every basis element h", [&](Witness& w) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vector lhs = multiply(h, in.integral, basis_vector(d, i));
      if (lhs != scale(h.counit()[i], in.integral)) {
        w.emplace_back("basis_index", static_cast<long>(i));
        w.emplace_back("product", literals(lhs, order));
        return ItemStatus::fail;
      }
    }
    return ItemStatus::pass;
  });
  add_item(report, "integrals.dual-left-integral", "phi lambda = <phi, 1> lambda for every dual basis element phi",
           [&](Witness& w) {
             for (std::size_t i = 0; i < d; ++i) {
               const Vector phi = basis_vector(d, i);
               const Vector lhs = convolve(phi, in.dual_integral, h);
               if (lhs != scale(h.unit()[i], in.dual_integral)) {
                 w.emplace_back("basis_index", static_cast<long>(i));
                 w.emplace_back("product", literals(lhs, order));
                 return ItemStatus::fail;
               }
             }
             return ItemStatus::pass;
           });
  return report;
}

VerificationReport verify_lemma1(const HopfData& h, const BlockDecomposition& blocks, const IntegralPair& in,
                                 const CharacterTable& table) {
  VerificationReport report = new_report(h, "lemma1");
  const unsigned order = blocks.cyclotomic_order;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const CycScalar ratio(Rational(static_cast<long>(h.dim())) / Rational(static_cast<long>(blocks.degrees[v])));
    const std::string& label = blocks.labels[v];
    add_item(report, "lemma1.A." + label, "(dim H / dim V) e_V = (S* chi_V) -> Lambda for V = " + label,
             [&](Witness& w) {
               const Vector lhs = scale(ratio, blocks.idempotents[v]);
               const Vector rhs = hit_act_dual_on_alg(dual_antipode(h, table.characters[v]), in.integral, h);
               w.emplace_back("dim_V", static_cast<long>(blocks.degrees[v]));
               w.emplace_back("lhs", literals(lhs, order));
               w.emplace_back("rhs", literals(rhs, order));
               if (lhs != rhs) w.emplace_back("difference", literals(sub(lhs, rhs), order));
               return status_of(lhs == rhs);
             });
    add_item(report, "lemma1.B." + label, "(dim H / dim V) (e_V -> lambda) = chi_V for V = " + label,
             [&](Witness& w) {
               const Vector lhs = scale(ratio, hit_act_alg_on_dual(blocks.idempotents[v], in.dual_integral, h));
               w.emplace_back("lhs", literals(lhs, order));
               w.emplace_back("chi_V", literals(table.characters[v], order));
               if (lhs != table.characters[v]) {
                 w.emplace_back("difference", literals(sub(lhs, table.characters[v]), order));
               }
               return status_of(lhs == table.characters[v]);
             });
  }
  return report;
}

VerificationReport verify_corollary(const HopfData& h, const BlockDecomposition& dual_blocks, const IntegralPair& in,
                                    const CharacterTable& dual_table, std::uint64_t seed) {
  VerificationReport report = new_report(h, "corollary");
  const unsigned order = dual_blocks.cyclotomic_order;
  const std::size_t r = dual_blocks.size();

  for (std::size_t m = 0; m < r; ++m) {
    const std::string& label = dual_blocks.labels[m];
    add_item(report, "corollary.primitive." + label, "delta_M -> Lambda = (dim M) chi_M for M = " + label,
             [&](Witness& w) {
               const Vector lhs = hit_act_dual_on_alg(dual_blocks.idempotents[m], in.integral, h);
               const Vector rhs = scale(from_long(dual_blocks.degrees[m]), dual_table.characters[m]);
               w.emplace_back("dim_M", static_cast<long>(dual_blocks.degrees[m]));
               w.emplace_back("lhs", literals(lhs, order));
               if (lhs != rhs) w.emplace_back("difference", literals(sub(lhs, rhs), order));
               return status_of(lhs == rhs);
             });
  }

  std::vector<std::vector<bool>> subsets;
  if (r <= kCorollaryExhaustiveBlocks) {
    for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
      std::vector<bool> s(r);
      for (std::size_t m = 0; m < r; ++m) s[m] = (mask >> m) & 1U;
      subsets.push_back(std::move(s));
    }
  } else {
    std::set<std::vector<bool>> seen;
    subsets.emplace_back(r, true);
    seen.insert(subsets.back());
    std::mt19937_64 rng(seed);
    while (subsets.size() < kCorollarySamples) {
      std::vector<bool> s(r);
      for (std::size_t m = 0; m < r; ++m) s[m] = rng() & 1U;
      if (std::find(s.begin(), s.end(), true) == s.end() || !seen.insert(s).second) continue;
      subsets.push_back(std::move(s));
    }
  }

  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const std::vector<bool>& s = subsets[k];
    add_item(report, "corollary.subset." + std::to_string(k + 1),
             "delta -> Lambda has non-negative integer coordinates in the irreducible H*-characters",
             [&](Witness& w) {
               Vector delta(h.dim());
               std::vector<std::string> members;
               std::vector<std::string> multiplicity;
               for (std::size_t m = 0; m < r; ++m) {
                 if (s[m]) {
                   delta = add(delta, dual_blocks.idempotents[m]);
                   members.push_back(dual_blocks.labels[m]);
                 }
                 multiplicity.push_back(std::to_string(s[m] ? dual_blocks.degrees[m] : 0));
               }
               w.emplace_back("subset", members);
               w.emplace_back("module_multiplicities", multiplicity);
               const Vector image = hit_act_dual_on_alg(delta, in.integral, h);
               const auto c = coordinates<CycScalar>(std::span<const Vector>(dual_table.characters), image);
               if (!c) {
                 w.emplace_back("error", std::string("not in the span of the H*-characters"));
                 return ItemStatus::fail;
               }
               w.emplace_back("coordinates", literals(*c, order));
               bool ok = true;
               for (std::size_t m = 0; m < r; ++m) {
                 const CycScalar& x = (*c)[m];
                 ok = ok && x.is_rational() && is_integer(x.rational()) && sgn(x.rational()) >= 0 &&
                      x == CycScalar(Rational(multiplicity[m]));
               }
               return status_of(ok);
             });
  }
  return report;
}

VerificationReport verify_proposition(const HopfData& h, const BlockDecomposition& blocks,
                                      const CharacterTable& table, const BlockDecomposition& dual_blocks,
                                      const IntegralPair& in, const CharacterTable& dual_table) {
  VerificationReport report = new_report(h, "proposition");
  const unsigned order = blocks.cyclotomic_order;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const std::string& label = blocks.labels[v];
    const unsigned deg = blocks.degrees[v];
    if (!is_central_character(table.characters[v], h)) {
      report.items.push_back({"proposition." + label, "hypothesis not satisfied: chi_V is not central in H*",
                              ItemStatus::skipped, {{"dim_V", static_cast<long>(deg)}}});
      continue;
    }
    const Vector s_chi = dual_antipode(h, table.characters[v]);
    add_item(report, "proposition." + label + ".divides", "dim V divides dim H for V = " + label, [&](Witness& w) {
      w.emplace_back("dim_V", static_cast<long>(deg));
      w.emplace_back("dim_H", static_cast<long>(h.dim()));
      w.emplace_back("remainder", static_cast<long>(h.dim() % deg));
      return status_of(h.dim() % deg == 0);
    });
    add_item(report, "proposition." + label + ".central-values",
             "every f_i(S* chi_V) is an algebraic integer for V = " + label, [&](Witness& w) {
               const CentralDecomposition cd = central_decomposition(s_chi, dual_blocks);
               std::vector<std::string> polys;
               bool ok = true;
               for (const CycScalar& f : cd.values) {
                 const IntegralityCertificate cert = is_algebraic_integer(f);
                 ok = ok && cert.is_integer && replay(cert);
                 polys.push_back(cert.minimal_polynomial.to_string());
               }
               w.emplace_back("values", literals(cd.values, order));
               w.emplace_back("minimal_polynomials", polys);
               return status_of(ok);
             });
    add_item(report, "proposition." + label + ".character-coordinates",
             "the H*-character coordinates of (S* chi_V) -> Lambda are f_i(S* chi_V) dim M_i, algebraic integers",
             [&](Witness& w) {
               const CentralDecomposition cd = central_decomposition(s_chi, dual_blocks);
               const Vector image = hit_act_dual_on_alg(s_chi, in.integral, h);
               const auto c = coordinates<CycScalar>(std::span<const Vector>(dual_table.characters), image);
               if (!c) {
                 w.emplace_back("error", std::string("not in the span of the H*-characters"));
                 return ItemStatus::fail;
               }
               w.emplace_back("coordinates", literals(*c, order));
               bool ok = true;
               for (std::size_t i = 0; i < c->size(); ++i) {
                 ok = ok && (*c)[i] == cd.values[i] * from_long(dual_blocks.degrees[i]) &&
                      is_algebraic_integer((*c)[i]).is_integer;
               }
               return status_of(ok);
             });
  }
  return report;
}

VerificationReport verify_section4(const HopfData& h, const BlockDecomposition& blocks, const IntegralPair& in,
                                   const CharacterTable& table, const BlockDecomposition& dual_blocks,
                                   const CharacterTable& dual_table) {
  VerificationReport report = new_report(h, "section4");
  const unsigned order = blocks.cyclotomic_order;
  const std::size_t d = h.dim();
  add_item(report, "section4.f-bijective", "f(phi) = phi -> Lambda is a bijection H* -> H", [&](Witness& w) {
    const std::size_t rk = rank(f_map_matrix(in, h));
    w.emplace_back("rank", static_cast<long>(rk));
    w.emplace_back("dim_H", static_cast<long>(d));
    return status_of(rk == d);
  });
  add_item(report, "section4.characters-to-center", "f(C(H)) = Z(H)", [&](Witness& w) {
    std::vector<Vector> image;
    for (const Vector& chi : table.characters) image.push_back(f_map(chi, in, h));
    w.emplace_back("rank_C(H)", static_cast<long>(rank(Matrix<CycScalar>::from_columns(
                                    std::span<const Vector>(table.characters), d))));
    w.emplace_back("dim_Z(H)", static_cast<long>(blocks.center_basis.size()));
    return status_of(same_span<CycScalar>(image, blocks.center_basis, d));
  });
  add_item(report, "section4.center-to-characters", "f(Z(H*)) = C(H*)", [&](Witness& w) {
    std::vector<Vector> image;
    for (const Vector& z : dual_blocks.center_basis) image.push_back(f_map(z, in, h));
    w.emplace_back("dim_Z(H*)", static_cast<long>(dual_blocks.center_basis.size()));
    w.emplace_back("rank_C(H*)", static_cast<long>(rank(Matrix<CycScalar>::from_columns(
                                     std::span<const Vector>(dual_table.characters), d))));
    return status_of(same_span<CycScalar>(image, dual_table.characters, d));
  });
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const std::string& label = blocks.labels[v];
    add_item(report, "section4.closure." + label,
             "f(chi_V*) = (dim H / dim V) e_V, with an integral coefficient iff dim V divides dim H, for V = " + label,
             [&](Witness& w) {
               const Vector image = f_map(dual_antipode(h, table.characters[v]), in, h);
               const CycScalar coef(Rational(static_cast<long>(d)) / Rational(static_cast<long>(blocks.degrees[v])));
               const IntegralityCertificate cert = is_algebraic_integer(coef);
               const bool divides = d % blocks.degrees[v] == 0;
               w.emplace_back("coefficient", coef.to_string(order));
               w.emplace_back("minimal_polynomial", cert.minimal_polynomial.to_string());
               w.emplace_back("divides", divides);
               return status_of(image == scale(coef, blocks.idempotents[v]) && cert.is_integer == divides &&
                                replay(cert));
             });
  }
  return report;
}

VerificationReport kaplansky_report(const HopfData& h, const BlockDecomposition& blocks,
                                    const CharacterTable& table) {
  VerificationReport report = new_report(h, "kaplansky");
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const std::string& label = blocks.labels[v];
    add_item(report, "kaplansky." + label, "dim V divides dim H whenever chi_V is central, for V = " + label,
             [&](Witness& w) {
               const bool divides = h.dim() % blocks.degrees[v] == 0;
               const bool central = is_central_character(table.characters[v], h);
               w.emplace_back("dim_V", static_cast<long>(blocks.degrees[v]));
               w.emplace_back("dim_H", static_cast<long>(h.dim()));
               w.emplace_back("divides", divides);
               w.emplace_back("central_character", central);
               return status_of(!central || divides);
             });
  }
  return report;
}

VerificationReport explore_central_fusion(const HopfData& h, const CharacterTable& table, const FusionRing& ring,
                                          const BlockDecomposition& blocks, const IntegralPair& in) {
  VerificationReport report = new_report(h, "central-fusion");
  report.exploratory = true;
  const std::size_t r = ring.size();
  const unsigned order = blocks.cyclotomic_order;

  // sum_V a_V (n[V][W][U] - n[W][V][U]) = 0 for all W, U
  Matrix<Rational> system(r * r, r);
  for (std::size_t v = 0; v < r; ++v)
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t u = 0; u < r; ++u)
        system(w * r + u, v) = Rational(ring.coefficients[v][w][u] - ring.coefficients[w][v][u]);
  std::vector<std::vector<Rational>> basis = kernel_basis(system);

  // Clear denominators, then divide out the content.
  std::vector<std::vector<Integer>> lattice;
  for (const auto& b : basis) {
    Integer den = 1;
    for (const Rational& x : b) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> iv;
    Integer content = 0;
    for (const Rational& x : b) {
      iv.push_back(Integer(x.get_num() * (den / x.get_den())));
      content = gcd(content, iv.back());
    }
    for (Integer& x : iv) x /= content;
    lattice.push_back(std::move(iv));
  }

  report.items.push_back({"central-fusion.rank", "rank of the center of the fusion ring", ItemStatus::pass,
                          {{"rank", static_cast<long>(lattice.size())}, {"ring_rank", static_cast<long>(r)}}});
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    add_item(report, "central-fusion.xi" + std::to_string(k + 1),
             "f(xi) has algebraically integral coordinates on the central idempotents e_V", [&](Witness& w) {
               Vector xi(h.dim());
               std::vector<std::string> combo;
               for (std::size_t v = 0; v < r; ++v) {
                 combo.push_back(lattice[k][v].get_str());
                 if (lattice[k][v] != 0) xi = add(xi, scale(CycScalar(Rational(lattice[k][v])), table.characters[v]));
               }
               w.emplace_back("combination", combo);
               const auto c = coordinates<CycScalar>(std::span<const Vector>(blocks.idempotents), f_map(xi, in, h));
               if (!c) {
                 w.emplace_back("error", std::string("f(xi) is not central"));
                 return ItemStatus::fail;
               }
               std::vector<std::string> polys;
               bool ok = true;
               for (const CycScalar& x : *c) {
                 const IntegralityCertificate cert = is_algebraic_integer(x);
                 ok = ok && cert.is_integer;
                 polys.push_back(cert.minimal_polynomial.to_string());
               }
               w.emplace_back("coordinates", literals(*c, order));
               w.emplace_back("minimal_polynomials", polys);
               return status_of(ok);
             });
  }
  return report;
}

BlockDecomposition corrupt_idempotent(BlockDecomposition blocks, std::size_t block) {
  Vector& e = blocks.idempotents.at(block);
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] != e[0]) {
      std::swap(e[0], e[i]);
      return blocks;
    }
  }
  throw Error("idempotent has no two distinct coordinates to swap");
}

}  // namespace hopfkit
