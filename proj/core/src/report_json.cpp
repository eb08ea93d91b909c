#include "hopfkit/report_json.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace hopfkit {

namespace {

using json = nlohmann::ordered_json;

json witness_json(const Witness& w) {
  json out = json::object();
  for (const auto& [key, value] : w) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

const char* status_word(ItemStatus s) {
  switch (s) {
    case ItemStatus::pass:
      return "PASS";
    case ItemStatus::fail:
      return "FAIL";
    case ItemStatus::skipped:
      return "SKIP";
  }
  return "?";
}

}  // namespace

std::string report_to_json(const ReportDocument& doc) {
  json root;
  root["algebra"] = doc.algebra;
  root["dim"] = doc.dim;
  json suites = json::array();
  for (const VerificationReport& s : doc.suites) {
    json items = json::array();
    for (const ReportItem& item : s.items) {
      json j;
      j["id"] = item.id;
      j["statement"] = s.exploratory ? "exploratory: " + item.statement : item.statement;
      if (item.status == ItemStatus::skipped) {
        j["pass"] = nullptr;
      } else {
        j["pass"] = item.status == ItemStatus::pass;
      }
      j["witness"] = witness_json(item.witness);
      items.push_back(std::move(j));
    }
    suites.push_back(json{{"name", s.suite}, {"items", std::move(items)}});
  }
  root["suites"] = std::move(suites);
  root["overall"] = doc.overall();
  return root.dump(2) + "\n";
}

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << doc.algebra << " (dim " << doc.dim << ")\n";
  for (const VerificationReport& s : doc.suites) {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const ReportItem& item : s.items) {
      (item.status == ItemStatus::pass ? pass : item.status == ItemStatus::fail ? fail : skip)++;
    }
    out << "\n[" << s.suite << "]" << (s.exploratory ? " exploratory" : "") << "  " << pass << " pass, " << fail
        << " fail, " << skip << " skipped\n";
    for (const ReportItem& item : s.items) {
      out << "  " << status_word(item.status) << "  " << item.id << "  " << item.statement << "\n";
      if (item.status == ItemStatus::fail) {
        for (const auto& [key, value] : item.witness) {
          if (const auto* str = std::get_if<std::string>(&value)) out << "        " << key << ": " << *str << "\n";
        }
      }
    }
  }
  out << "\noverall: " << (doc.overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string characters_to_json(const HopfData& h, const CharacterTable& table, const std::vector<bool>& central,
                               const FusionRing& ring, unsigned order) {
  json root;
  root["algebra"] = h.name();
  root["dim"] = h.dim();
  root["cyclotomic_order"] = order;
  json chars = json::array();
  for (std::size_t v = 0; v < table.size(); ++v) {
    std::vector<std::string> values;
    for (const CycScalar& c : table.characters[v]) values.push_back(c.to_string(order));
    chars.push_back(json{{"label", table.labels[v]},
                         {"degree", table.degrees[v]},
                         {"central", static_cast<bool>(central[v])},
                         {"dual", ring.labels[ring.dual[v]]},
                         {"values", values},
                         {"fusion_char_poly", ring.char_polys[v].to_string()}});
  }
  root["characters"] = std::move(chars);
  json fusion = json::array();
  for (std::size_t v = 0; v < ring.size(); ++v)
    for (std::size_t w = 0; w < ring.size(); ++w) {
      json terms = json::object();
      for (std::size_t u = 0; u < ring.size(); ++u) {
        if (ring.coefficients[v][w][u] != 0) terms[ring.labels[u]] = ring.coefficients[v][w][u].get_si();
      }
      fusion.push_back(json{{"left", ring.labels[v]}, {"right", ring.labels[w]}, {"product", std::move(terms)}});
    }
  root["fusion"] = std::move(fusion);
  return root.dump(2) + "\n";
}

}  // namespace hopfkit
