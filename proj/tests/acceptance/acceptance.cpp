// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopfkit/factor.hpp"
#include "test_support.hpp"

namespace {

using namespace hopfkit;
using hopfkit::testing::example;
using hopfkit::testing::examples;
using hopfkit::testing::session;
using Clock = std::chrono::steady_clock;

// Collects the reasons a criterion failed.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool no_failures(const VerificationReport& r) { return r.passed() && !r.items.empty(); }

std::vector<unsigned> sorted(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const ReportItem* find_item(const VerificationReport& r, const std::string& id) {
  for (const ReportItem& i : r.items)
    if (i.id == id) return &i;
  return nullptr;
}

Poly<Rational> from_ints(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long x : low_to_high) c.emplace_back(x);
  return Poly<Rational>(std::move(c));
}

void axioms(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const auto start = Clock::now();
    const AxiomReport r = check_axioms(h);
    const double t = seconds_since(start);
    c.expect(r.all_pass(), name + ": axiom check failed");
    c.expect(t < 5.0, name + ": took " + std::to_string(t) + " s");
  }
}

void integrals(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const VerificationReport r = session(name).run_suite("integrals");
    c.expect(no_failures(r), name + ": integral suite failed");
    const IntegralPair& in = session(name).integrals();
    c.expect(pair(in.dual_integral, h.unit()).is_one(), name + ": <lambda, 1> != 1");
    c.expect(pair(in.dual_integral, in.integral).is_one(), name + ": <lambda, Lambda> != 1");
    c.expect(pair(h.counit(), in.integral) == CycScalar(static_cast<long>(h.dim())), name + ": <eps, Lambda>");
  }
  const IntegralPair& c2 = session("kC2").integrals();
  c.expect(c2.integral == Vector{CycScalar(1), CycScalar(1)}, "kC2: Lambda != e + g");
  c.expect(c2.dual_integral == Vector{CycScalar(1), CycScalar(0)}, "kC2: lambda != delta_e");
}

void wedderburn(Criterion& c) {
  const std::map<std::string, std::vector<unsigned>> want{{"kC2", {1, 1}},
                                                          {"kS3", {1, 1, 2}},
                                                          {"kQ8", {1, 1, 1, 1, 2}},
                                                          {"k^S3", {1, 1, 1, 1, 1, 1}},
                                                          {"D(S3)", {1, 1, 2, 2, 2, 2, 3, 3}}};
  for (const auto& [name, h] : examples()) {
    const auto start = Clock::now();
    const BlockDecomposition b = primitive_idempotents(h, h.cyclotomic_order(), 0);
    const double t = seconds_since(start);
    const double limit = name == "D(S3)" ? 120.0 : 15.0;
    c.expect(t < limit, name + ": took " + std::to_string(t) + " s");
    if (auto it = want.find(name); it != want.end()) {
      c.expect(sorted(b.degrees) == it->second, name + ": wrong degree multiset");
    }
    unsigned long squares = 0;
    for (unsigned d : b.degrees) squares += static_cast<unsigned long>(d) * d;
    c.expect(squares == h.dim(), name + ": sum of squared degrees");
    for (const Check& k : verify_blocks(h, b.idempotents, b.degrees)) c.expect(k.pass, name + ": " + k.name);
  }
}

void lemma1(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    c.expect(no_failures(session(name).run_suite("lemma1")), name + ": lemma1 suite failed");
  }
  Session& s = session("kS3");
  const BlockDecomposition& b = s.blocks();
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.degrees[v] != 2) continue;
    const VerificationReport bad = verify_lemma1(s.algebra(), corrupt_idempotent(b, v), s.integrals(), s.characters());
    const ReportItem* a = find_item(bad, "lemma1.A." + b.labels[v]);
    c.expect(a != nullptr && a->status == ItemStatus::fail, "corrupted idempotent not detected by item A");
  }
}

void corollary(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const VerificationReport r = session(name).run_suite("corollary");
    c.expect(no_failures(r), name + ": corollary suite failed");
    const std::size_t primitive = static_cast<std::size_t>(std::count_if(
        r.items.begin(), r.items.end(), [](const ReportItem& i) { return i.id.rfind("corollary.primitive.", 0) == 0; }));
    c.expect(primitive == session(name).dual_blocks().size(), name + ": missing dual blocks");
  }
}

void proposition(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const VerificationReport r = session(name).run_suite("proposition");
    c.expect(no_failures(r), name + ": proposition suite failed");
    const std::size_t skipped = static_cast<std::size_t>(std::count_if(
        r.items.begin(), r.items.end(), [](const ReportItem& i) { return i.status == ItemStatus::skipped; }));
    if (name.rfind("k^", 0) != 0 && name.rfind("k", 0) == 0 && name.find("(x)") == std::string::npos) {
      c.expect(skipped == 0, name + ": a group algebra block lacks the hypothesis");
    }
    if (name == "k^S3") {
      c.expect(skipped == session(name).blocks().size() - 1, "k^S3: expected exactly one central character");
      const CharacterTable& t = session(name).characters();
      for (std::size_t v = 0; v < t.size(); ++v) {
        const bool central = is_central_character(t.characters[v], h);
        c.expect(central == (t.characters[v] == h.counit()), "k^S3: the central character is not eps");
      }
    }
    // The certificate check itself: every central value replays.
    for (const ReportItem& i : r.items) {
      if (i.id.size() > 15 && i.id.ends_with(".central-values")) {
        c.expect(i.status == ItemStatus::pass, name + ": " + i.id);
      }
    }
  }
  for (unsigned d : session("D(S3)").blocks().degrees) c.expect(36 % d == 0, "D(S3): a degree does not divide 36");
}

void section4(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const VerificationReport r = session(name).run_suite("section4");
    c.expect(no_failures(r), name + ": section4 suite failed");
    for (const char* id : {"section4.f-bijective", "section4.characters-to-center", "section4.center-to-characters"}) {
      const ReportItem* i = find_item(r, id);
      c.expect(i != nullptr && i->status == ItemStatus::pass, name + ": " + id);
    }
  }
}

void fusion(Criterion& c) {
  for (const auto& [name, h] : examples()) {
    const FusionRing& r = session(name).fusion();
    const CharacterTable& t = session(name).characters();
    for (std::size_t v = 0; v < r.size(); ++v) {
      for (const auto& row : r.coefficients[v])
        for (const Integer& n : row) c.expect(n >= 0, name + ": negative fusion coefficient");
      c.expect(r.char_polys[v].is_monic(), name + ": char poly not monic");
      c.expect(is_zero(evaluate_convolution(r.char_polys[v], t.characters[v], h)), name + ": char poly");
    }
  }
  const CharacterTable& t = session("kS3").characters();
  const FusionRing& r = session("kS3").fusion();
  std::size_t std2 = 0, sign = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.degrees[v] == 2) std2 = v;
    if (t.degrees[v] == 1 && v != r.unit) sign = v;
  }
  const auto& sq = r.coefficients[std2][std2];
  c.expect(sq[r.unit] == 1 && sq[sign] == 1 && sq[std2] == 1, "kS3: chi_2^2 != triv + sign + chi_2");
  // Cross-check the ring against convolution directly.
  const HopfData& h = example("kS3");
  const Vector want = add(add(t.characters[r.unit], t.characters[sign]), t.characters[std2]);
  c.expect(convolve(t.characters[std2], t.characters[std2], h) == want, "kS3: chi_2 * chi_2 by convolution");
}

void factorization(Criterion& c) {
  const Poly<Rational> x6 = from_ints({-1, 0, 0, 0, 0, 0, 1});
  const RationalFactorization f = factor_rational(x6);
  std::vector<std::string> want, got;
  for (unsigned d : {1U, 2U, 3U, 6U}) {
    std::vector<Rational> coeffs;
    for (const Integer& k : cyclotomic_polynomial(d)) coeffs.emplace_back(k);
    want.push_back(Poly<Rational>(coeffs).to_string());
  }
  Poly<Rational> product = Poly<Rational>::constant(f.unit);
  for (const RationalFactor& rf : f.factors) {
    c.expect(rf.multiplicity == 1, "x^6 - 1: repeated factor");
    got.push_back(rf.factor.to_string());
    product = product * rf.factor;
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  c.expect(got == want, "x^6 - 1: factors are not Phi_1 Phi_2 Phi_3 Phi_6");
  c.expect(product == x6, "x^6 - 1: product mismatch");

  const Poly<Rational> phi12 = from_ints({1, 0, -1, 0, 1});
  const RationalFactorization g = factor_rational(phi12);
  c.expect(g.factors.size() == 1 && g.factors[0].factor == phi12, "x^4 - x^2 + 1: not irreducible over Q");
  const auto lin = factor_over_cyclotomic(phi12, 12);
  c.expect(lin.size() == 4, "x^4 - x^2 + 1: expected four linear factors over Q(zeta_12)");
  Poly<CycScalar> k = Poly<CycScalar>::constant(CycScalar(1));
  for (const auto& l : lin) {
    c.expect(l.degree() == 1, "x^4 - x^2 + 1: nonlinear factor over Q(zeta_12)");
    k = k * l;
  }
  c.expect(k == to_cyclotomic(phi12), "x^4 - x^2 + 1: product mismatch over Q(zeta_12)");
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string(HOPFKIT_CLI_PATH) + " " + args + " -o " + out.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Criterion& c) {
  const auto dir = std::filesystem::temp_directory_path() / "hopfkit_acceptance";
  std::filesystem::create_directories(dir);
  for (const char* kind : {"double", "function-algebra"}) {
    const std::string args =
        std::string("report --json --seed 7 ") + HOPFKIT_SAMPLES_DIR + "/s3.grp --as " + kind;
    c.expect(run_cli(args, dir / "a.json") == 0, std::string(kind) + ": first run failed");
    c.expect(run_cli(args, dir / "b.json") == 0, std::string(kind) + ": second run failed");
    const std::string a = slurp(dir / "a.json"), b = slurp(dir / "b.json");
    c.expect(!a.empty() && a == b, std::string(kind) + ": reports differ");
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"axioms", axioms},       {"integrals", integrals},     {"wedderburn", wedderburn}, {"lemma1", lemma1},
      {"corollary", corollary}, {"proposition", proposition}, {"section4", section4},     {"fusion", fusion},
      {"factorization", factorization}, {"determinism", determinism}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    const auto start = Clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << seconds_since(start) << " s)\n";
    for (const std::string& f : c.failures()) std::cout << "    " << f << "\n";
    failed += !c.ok();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
