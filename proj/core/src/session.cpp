#include "hopfkit/session.hpp"

#include <algorithm>

#include "hopfkit/error.hpp"

namespace hopfkit {

Session::Session(HopfData algebra, SessionConfig config)
    : algebra_(std::move(algebra)),
      config_(std::move(config)),
      order_(config_.cyclotomic_order != 0 ? config_.cyclotomic_order : algebra_.cyclotomic_order()) {}

const HopfData& Session::dual() {
  if (!dual_) dual_ = dualize(algebra_);
  return *dual_;
}

const IntegralPair& Session::integrals() {
  if (!integrals_) integrals_ = compute_integrals(algebra_);
  return *integrals_;
}

const IntegralPair& Session::dual_integrals() {
  if (!dual_integrals_) dual_integrals_ = compute_integrals(dual());
  return *dual_integrals_;
}

const BlockDecomposition& Session::blocks() {
  if (!blocks_) blocks_ = primitive_idempotents(algebra_, order_, config_.seed, "V");
  return *blocks_;
}

const BlockDecomposition& Session::dual_blocks() {
  if (!dual_blocks_) dual_blocks_ = primitive_idempotents(dual(), order_, config_.seed, "M");
  return *dual_blocks_;
}

const CharacterTable& Session::characters() {
  if (!characters_) characters_ = irreducible_characters(algebra_, blocks(), integrals());
  return *characters_;
}

const CharacterTable& Session::dual_characters() {
  if (!dual_characters_) dual_characters_ = irreducible_characters(dual(), dual_blocks(), dual_integrals());
  return *dual_characters_;
}

const FusionRing& Session::fusion() {
  if (!fusion_) fusion_ = fusion_ring(characters(), algebra_);
  return *fusion_;
}

const std::vector<std::string>& Session::suite_names() {
  static const std::vector<std::string> names{"axioms",      "integrals", "lemma1",    "corollary",
                                              "proposition", "section4",  "kaplansky", "central-fusion"};
  return names;
}

VerificationReport Session::run_suite(const std::string& name) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw Error("unknown suite '" + name + "'");
  try {
    if (name == "axioms") return verify_axioms(algebra_, order_);
    if (name == "integrals") return verify_integrals(algebra_, integrals(), order_);
    if (name == "lemma1") return verify_lemma1(algebra_, blocks(), integrals(), characters());
    if (name == "corollary") {
      return verify_corollary(algebra_, dual_blocks(), integrals(), dual_characters(), config_.seed);
    }
    if (name == "proposition") {
      return verify_proposition(algebra_, blocks(), characters(), dual_blocks(), integrals(), dual_characters());
    }
    if (name == "section4") {
      return verify_section4(algebra_, blocks(), integrals(), characters(), dual_blocks(), dual_characters());
    }
    if (name == "kaplansky") return kaplansky_report(algebra_, blocks(), characters());
    return explore_central_fusion(algebra_, characters(), fusion(), blocks(), integrals());
  } catch (const Error& e) {
    VerificationReport r;
    r.algebra = algebra_.name();
    r.dim = algebra_.dim();
    r.suite = name;
    r.exploratory = name == "central-fusion";
    r.items.push_back({name + ".pipeline", "the inputs of this suite could be computed", ItemStatus::fail,
                       {{"error", std::string(e.what())}}});
    return r;
  }
}

ReportDocument Session::run(const std::vector<std::string>& suites) {
  ReportDocument doc;
  doc.algebra = algebra_.name();
  doc.dim = algebra_.dim();
  for (const std::string& s : suites) doc.suites.push_back(run_suite(s));
  return doc;
}

}  // namespace hopfkit
