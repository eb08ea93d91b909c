#include "hopfkit/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

unsigned GroupTable::element_order(std::size_t g) const {
  unsigned k = 1;
  std::size_t x = g;
  while (x != identity) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::size_t GroupTable::conjugate(std::size_t g, std::size_t by) const { return mul(mul(by, g), inverse[by]); }

std::vector<std::vector<std::size_t>> GroupTable::conjugacy_classes() const {
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < order(); ++h) {
      const std::size_t c = conjugate(g, h);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> GroupTable::centralizer(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < order(); ++h)
    if (mul(g, h) == mul(h, g)) out.push_back(h);
  return out;
}

GroupTable make_group(std::string name, std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error("group '" + name + "' has no elements");
  if (table.size() != n) throw Error("group '" + name + "': table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error("group '" + name + "': row " + std::to_string(i) + " has wrong length");
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error("group '" + name + "': table entry out of range");
      if (row_seen[table[i][j]]) {
        throw Error("Latin-square violation: element '" + elements[table[i][j]] + "' repeats in row '" + elements[i] + "'");
      }
      row_seen[table[i][j]] = true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[j][i] >= n) throw Error("group '" + name + "': table entry out of range");
      if (col_seen[table[j][i]]) {
        throw Error("Latin-square violation: element '" + elements[table[j][i]] + "' repeats in column '" + elements[i] + "'");
      }
      col_seen[table[j][i]] = true;
    }
  }
  GroupTable g;
  g.name = std::move(name);
  g.elements = std::move(elements);
  g.table = std::move(table);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = g.table[e][j] == j && g.table[j][e] == j;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw Error("group '" + g.name + "' has no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          throw Error("associativity violation: (" + g.elements[a] + g.elements[b] + ")" + g.elements[c] + " != " +
                      g.elements[a] + "(" + g.elements[b] + g.elements[c] + ")");
        }
      }
  g.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table[a][b] == g.identity) g.inverse[a] = b;
  g.exponent = 1;
  for (std::size_t a = 0; a < n; ++a) g.exponent = std::lcm(g.exponent, g.element_order(a));
  return g;
}

namespace {

std::vector<std::pair<std::string, std::size_t>> tokens(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(std::string(line.substr(start, i - start)), start + 1);
  }
  return out;
}

std::size_t parse_count(const std::string& s, std::size_t line, std::size_t col) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("expected a positive integer, got '" + s + "'", line, col);
  }
  return std::stoul(s);
}

}  // namespace

GroupTable parse_group(std::string_view text) {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> elements;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> table;
  bool in_table = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (in_table) {
      if (table.size() == order) throw ParseError("extra table row", line_no, tok[0].second);
      if (tok.size() != order) {
        throw ParseError("table row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(order),
                         line_no, tok[0].second);
      }
      std::vector<std::size_t> row;
      for (const auto& [name_tok, col] : tok) {
        auto it = index.find(name_tok);
        if (it == index.end()) throw ParseError("unknown element '" + name_tok + "'", line_no, col);
        row.push_back(it->second);
      }
      table.push_back(std::move(row));
      continue;
    }
    const std::string& key = tok[0].first;
    if (key == "group") {
      if (tok.size() != 2) throw ParseError("expected 'group <name>'", line_no, tok[0].second);
      name = tok[1].first;
    } else if (key == "order") {
      if (tok.size() != 2) throw ParseError("expected 'order <n>'", line_no, tok[0].second);
      order = parse_count(tok[1].first, line_no, tok[1].second);
      if (order == 0) throw ParseError("order must be positive", line_no, tok[1].second);
    } else if (key == "elements") {
      if (order == 0) throw ParseError("'order' must precede 'elements'", line_no, tok[0].second);
      if (tok.size() != order + 1) {
        throw ParseError("expected " + std::to_string(order) + " element names", line_no, tok[0].second);
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index.emplace(tok[i].first, i - 1).second) {
          throw ParseError("duplicate element name '" + tok[i].first + "'", line_no, tok[i].second);
        }
        elements.push_back(tok[i].first);
      }
    } else if (key == "table") {
      if (elements.empty()) throw ParseError("'elements' must precede 'table'", line_no, tok[0].second);
      if (tok.size() != 1) throw ParseError("unexpected text after 'table'", line_no, tok[1].second);
      in_table = true;
    } else {
      throw ParseError("unexpected '" + key + "'", line_no, tok[0].second);
    }
  }
  if (name.empty()) throw ParseError("missing 'group <name>' header", 0, 0);
  if (!in_table) throw ParseError("missing 'table' section", 0, 0);
  if (table.size() != order) {
    throw ParseError("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(order), line_no, 1);
  }
  return make_group(std::move(name), std::move(elements), std::move(table));
}

GroupTable read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

std::string format_group(const GroupTable& g) {
  std::ostringstream out;
  out << "group " << g.name << "\n";
  out << "order " << g.order() << "\n";
  out << "elements";
  for (const auto& e : g.elements) out << ' ' << e;
  out << "\ntable\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.elements[g.table[i][j]];
    out << "\n";
  }
  return out.str();
}

GroupTable cyclic_group(unsigned n) {
  std::vector<std::string> names;
  names.push_back("e");
  for (unsigned k = 1; k < n; ++k) names.push_back(k == 1 ? "a" : "a" + std::to_string(k));
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return make_group("C" + std::to_string(n), std::move(names), std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  std::vector<std::string> names;
  const std::size_t na = a.order(), nb = b.order();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      if (i == a.identity && j == b.identity) {
        names.push_back("e");
      } else {
        names.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
      }
    }
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return make_group(a.name + "x" + b.name, std::move(names), std::move(t));
}

namespace {

// Permutation group from generators, listing elements in breadth-first order.
template <std::size_t N>
GroupTable permutation_group(std::string name, const std::vector<std::array<int, N>>& gens,
                             const std::vector<std::string>& gen_names) {
  using Perm = std::array<int, N>;
  Perm id;
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm& p, const Perm& q) {  // (p q)(i) = p(q(i))
    Perm r;
    for (std::size_t i = 0; i < N; ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  std::vector<Perm> elems{id};
  std::vector<std::string> names{"e"};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Perm next = compose(elems[k], gens[g]);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) {
        elems.push_back(next);
        names.push_back(names[k] == "e" ? gen_names[g] : names[k] + gen_names[g]);
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Perm p = compose(elems[i], elems[j]);
      t[i][j] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  return make_group(std::move(name), std::move(names), std::move(t));
}

GroupTable quaternion_group() {
  // Elements +-1, +-i, +-j, +-k encoded as (sign, unit) with unit in {1, i, j, k}.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const char* units[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 4; ++u) names.push_back(s == 0 ? (u == 0 ? std::string("e") : std::string(units[u]))
                                                         : "-" + std::string(units[u]));
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      int sign = (a / 4 == b / 4) ? 1 : -1;
      sign *= sign_mul[ua][ub];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<std::size_t>((sign == 1 ? 0 : 4) + unit_mul[ua][ub]);
    }
  return make_group("Q8", std::move(names), std::move(t));
}

}  // namespace

std::vector<std::string> builtin_group_names() { return {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"}; }

GroupTable builtin_group(const std::string& name) {
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "C4") return cyclic_group(4);
  if (name == "C2xC2") {
    GroupTable g = direct_product(cyclic_group(2), cyclic_group(2));
    g.name = "C2xC2";
    return g;
  }
  if (name == "S3") {
    return permutation_group<3>("S3", {{1, 0, 2}, {1, 2, 0}}, {"s", "r"});
  }
  if (name == "D4") {
    // rotation of the square and a reflection
    return permutation_group<4>("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}, {"r", "s"});
  }
  if (name == "Q8") return quaternion_group();
  throw Error("unknown built-in group '" + name + "'");
}

}  // namespace hopfkit
