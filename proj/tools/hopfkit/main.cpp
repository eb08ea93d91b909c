// hopfkit command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hopfkit/builders.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/hopf_io.hpp"
#include "hopfkit/report_json.hpp"
#include "hopfkit/session.hpp"

namespace {

using namespace hopfkit;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Input-side problems map to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

HopfData build_from_group(const std::string& kind, const GroupTable& g) {
  if (kind == "group-algebra") return group_algebra(g);
  if (kind == "function-algebra") return function_algebra(g);
  if (kind == "double") return drinfeld_double(g);
  throw InputError("unknown construction '" + kind + "'");
}

HopfData load(const std::string& path, const std::string& as) {
  if (!std::ifstream(path)) throw InputError("cannot open '" + path + "'");
  if (ends_with(path, ".grp")) {
    if (as.empty()) throw InputError(path + ": a group file needs --as group-algebra|function-algebra|double");
    return build_from_group(as, read_group_file(path));
  }
  if (!as.empty()) throw InputError("--as only applies to .grp inputs");
  return read_hopf_file(path);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + output + "'");
  out << text;
}

std::string vector_line(const Vector& v, unsigned order) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string(order);
  return s + ")";
}

struct Options {
  std::string input;
  std::string input2;
  std::string as;
  std::string output;
  std::string suite = "all";
  std::string kind;
  unsigned order = 0;
  std::uint64_t seed = 0;
  bool json = false;
  bool dual = false;
};

SessionConfig session_config(const Options& o) {
  SessionConfig c;
  c.cyclotomic_order = o.order;
  c.seed = o.seed;
  c.format = o.json ? OutputFormat::json : OutputFormat::text;
  c.output = o.output;
  return c;
}

int cmd_build(const Options& o) {
  HopfData h = o.kind == "tensor" ? tensor_product(load(o.input, ""), load(o.input2, ""))
                                  : load(o.input, o.kind);
  emit(format_hopf(h), o.output);
  return kOk;
}

int cmd_check_axioms(const Options& o) {
  const HopfData h = load(o.input, o.as);
  const AxiomReport r = check_axioms(h);
  std::ostringstream out;
  out << h.name() << " (dim " << h.dim() << ")\n";
  for (const AxiomCheck& c : r.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass) out << "  [" << c.detail << "]";
    out << "\n";
  }
  emit(out.str(), o.output);
  return r.all_pass() ? kOk : kFailed;
}

int cmd_integrals(const Options& o) {
  Session s(load(o.input, o.as), session_config(o));
  const IntegralPair& in = s.integrals();
  std::ostringstream out;
  out << s.algebra().name() << " (dim " << s.algebra().dim() << ")\n"
      << "Lambda          = " << vector_line(in.integral, s.order()) << "\n"
      << "lambda          = " << vector_line(in.dual_integral, s.order()) << "\n"
      << "<eps, Lambda>   = " << pair(s.algebra().counit(), in.integral).to_string(s.order()) << "\n"
      << "semisimple      = " << (in.semisimple ? "yes" : "no") << "\n"
      << "cosemisimple    = " << (in.cosemisimple ? "yes" : "no") << "\n"
      << "two-sided       = " << (in.two_sided ? "yes" : "no") << "\n";
  emit(out.str(), o.output);
  return kOk;
}

int cmd_wedderburn(const Options& o) {
  Session s(load(o.input, o.as), session_config(o));
  const BlockDecomposition& b = o.dual ? s.dual_blocks() : s.blocks();
  const HopfData& h = o.dual ? s.dual() : s.algebra();
  std::ostringstream out;
  out << h.name() << " (dim " << h.dim() << ") over Q(z), z = zeta_" << b.cyclotomic_order << "\n"
      << "dim Z = " << b.center_basis.size() << ", " << b.splitting_elements.size() << " splitting element(s) in "
      << b.attempts << " draw(s)\n";
  for (std::size_t v = 0; v < b.size(); ++v) {
    out << b.labels[v] << "  degree " << b.degrees[v] << "  eigenvalue " << b.eigenvalues[v].to_string(b.cyclotomic_order)
        << " of " << b.field_polynomials[v].to_string() << "\n    e = " << vector_line(b.idempotents[v], b.cyclotomic_order) << "\n";
  }
  for (const Check& c : b.checks) out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
  emit(out.str(), o.output);
  return kOk;
}

int cmd_characters(const Options& o) {
  Session s(load(o.input, o.as), session_config(o));
  const CharacterTable& t = s.characters();
  const FusionRing& ring = s.fusion();
  std::vector<bool> central;
  for (const Vector& chi : t.characters) central.push_back(is_central_character(chi, s.algebra()));
  if (o.json) {
    emit(characters_to_json(s.algebra(), t, central, ring, s.order()), o.output);
    return kOk;
  }
  std::ostringstream out;
  out << s.algebra().name() << " (dim " << s.algebra().dim() << "), z = zeta_" << s.order() << "\n";
  for (std::size_t v = 0; v < t.size(); ++v) {
    out << t.labels[v] << "  dim " << t.degrees[v] << "  central " << (central[v] ? "yes" : "no") << "  dual "
        << ring.labels[ring.dual[v]] << "\n    chi = " << vector_line(t.characters[v], s.order())
        << "\n    fusion char poly " << ring.char_polys[v].to_string() << "\n";
  }
  out << "fusion:\n";
  for (std::size_t v = 0; v < ring.size(); ++v)
    for (std::size_t w = 0; w < ring.size(); ++w) {
      out << "  " << ring.labels[v] << " * " << ring.labels[w] << " =";
      bool first = true;
      for (std::size_t u = 0; u < ring.size(); ++u) {
        const Integer& n = ring.coefficients[v][w][u];
        if (n == 0) continue;
        out << (first ? " " : " + ") << (n == 1 ? "" : n.get_str() + " ") << ring.labels[u];
        first = false;
      }
      out << "\n";
    }
  emit(out.str(), o.output);
  return kOk;
}

int cmd_verify(const Options& o, bool full_report) {
  Session s(load(o.input, o.as), session_config(o));
  std::vector<std::string> suites;
  if (full_report || o.suite == "all") {
    suites = Session::suite_names();
  } else {
    const auto& names = Session::suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
      throw InputError("unknown suite '" + o.suite + "'");
    }
    suites.push_back(o.suite);
  }
  const ReportDocument doc = s.run(suites);
  emit(o.json ? report_to_json(doc) : report_to_text(doc), o.output);
  return doc.overall() ? kOk : kFailed;
}

void add_analysis_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.input, "Input .hopf file, or .grp together with --as")->required();
  cmd->add_option("--as", o.as, "Construction applied to a .grp input")
      ->check(CLI::IsMember({"group-algebra", "function-algebra", "double"}));
  cmd->add_option("--cyclotomic,-N", o.order, "Work over Q(zeta_N); default taken from the input")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for the splitting-element search");
  cmd->add_option("-o,--output", o.output, "Write the result to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and verification reports for semisimple Hopf algebras", "hopfkit"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a .hopf file");
  build->add_option("kind", o.kind, "group-algebra | function-algebra | double | tensor")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "function-algebra", "double", "tensor"}));
  build->add_option("file", o.input, "Input .grp file (two .hopf files for tensor)")->required();
  build->add_option("second", o.input2, "Second factor of a tensor product");
  build->add_option("-o,--output", o.output, "Output .hopf path (default: standard output)");

  auto* axioms = app.add_subcommand("check-axioms", "Check the Hopf algebra axioms exhaustively");
  axioms->add_option("file", o.input, "Input .hopf file, or .grp together with --as")->required();
  axioms->add_option("--as", o.as, "Construction applied to a .grp input")
      ->check(CLI::IsMember({"group-algebra", "function-algebra", "double"}));
  axioms->add_option("-o,--output", o.output, "Write the result to this file");

  auto* integrals = app.add_subcommand("integrals", "Compute the normalized integrals");
  add_analysis_flags(integrals, o);

  auto* wedderburn = app.add_subcommand("wedderburn", "Compute the centrally primitive idempotents");
  add_analysis_flags(wedderburn, o);
  wedderburn->add_flag("--dual", o.dual, "Decompose H* instead of H");

  auto* characters = app.add_subcommand("characters", "Character table, centrality, and fusion ring");
  add_analysis_flags(characters, o);
  characters->add_flag("--json", o.json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_analysis_flags(verify, o);
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"axioms", "integrals", "lemma1", "corollary", "proposition", "section4", "kaplansky",
                             "central-fusion", "all"}));
  verify->add_flag("--json", o.json, "Machine-readable output");

  auto* report = app.add_subcommand("report", "Run every suite and emit one report");
  add_analysis_flags(report, o);
  report->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      if ((o.kind == "tensor") != !o.input2.empty()) {
        std::cerr << "error: tensor takes two .hopf files, the other constructions one .grp file\n";
        return kUsage;
      }
      return cmd_build(o);
    }
    if (*axioms) return cmd_check_axioms(o);
    if (*integrals) return cmd_integrals(o);
    if (*wedderburn) return cmd_wedderburn(o);
    if (*characters) return cmd_characters(o);
    if (*verify) return cmd_verify(o, false);
    if (*report) return cmd_verify(o, true);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
