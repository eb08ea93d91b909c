#include "hopfkit/hopf_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "hopfkit/error.hpp"
#include "hopfkit/scalar_io.hpp"

namespace hopfkit {

namespace {

enum class Section { header, mult, comult, unit, counit, antipode };

struct Cursor {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= line.size();
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    return line.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw ParseError(message, line_no, column + 1);
  }
  std::size_t index(std::size_t dim) {
    skip_space();
    const std::size_t col = pos;
    const std::string_view w = word();
    if (w.empty()) fail("expected an index", col);
    std::size_t value = 0;
    for (char ch : w) {
      if (ch < '0' || ch > '9') fail("invalid index '" + std::string(w) + "'", col);
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > 1000000) fail("index out of range", col);
    }
    if (value >= dim) fail("index " + std::to_string(value) + " out of range for dim " + std::to_string(dim), col);
    return value;
  }
  CycScalar scalar(unsigned order) {
    skip_space();
    const std::size_t col = pos;
    std::string_view rest = line.substr(pos);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
    if (rest.empty()) fail("expected a scalar", col);
    try {
      return parse_scalar(rest, order);
    } catch (const ParseError& e) {
      fail(e.what(), col);
    }
  }
};

}  // namespace

HopfData parse_hopf(std::string_view text) {
  std::string name;
  std::optional<std::size_t> dim;
  std::optional<unsigned> order;
  Section section = Section::header;
  Tensor3 mult, comult;
  Vector unit, counit;
  Matrix<CycScalar> antipode;
  bool allocated = false;

  auto allocate = [&](const Cursor& c) {
    if (allocated) return;
    if (!dim) c.fail("'dim' must precede the structure sections", 0);
    if (!order) order = 1;
    mult = Tensor3(*dim);
    comult = Tensor3(*dim);
    unit = Vector(*dim);
    counit = Vector(*dim);
    antipode = Matrix<CycScalar>(*dim, *dim);
    allocated = true;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c{line, 0, line_no};
    if (c.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t key_col = c.pos;
    const std::string_view key = c.word();
    if (key == "hopf") {
      c.skip_space();
      name = std::string(line.substr(c.pos));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\r')) name.pop_back();
      if (name.empty()) c.fail("missing algebra name", c.pos);
    } else if (key == "dim") {
      if (allocated) c.fail("'dim' after structure data", key_col);
      dim = c.index(1000001);
      if (*dim == 0) c.fail("dimension must be positive", key_col);
    } else if (key == "cyclotomic") {
      if (allocated) c.fail("'cyclotomic' after structure data", key_col);
      const std::size_t n = c.index(1000001);
      if (n == 0) c.fail("cyclotomic order must be positive", key_col);
      order = static_cast<unsigned>(n);
    } else if (key == "MULT") {
      allocate(c);
      section = Section::mult;
    } else if (key == "COMULT") {
      allocate(c);
      section = Section::comult;
    } else if (key == "UNIT") {
      allocate(c);
      section = Section::unit;
    } else if (key == "COUNIT") {
      allocate(c);
      section = Section::counit;
    } else if (key == "ANTIPODE") {
      allocate(c);
      section = Section::antipode;
    } else {
      if (section == Section::header) c.fail("unexpected '" + std::string(key) + "'", key_col);
      c.pos = key_col;
      switch (section) {
        case Section::mult:
        case Section::comult: {
          const std::size_t i = c.index(*dim), j = c.index(*dim), k = c.index(*dim);
          (section == Section::mult ? mult : comult)(i, j, k) = c.scalar(*order);
          break;
        }
        case Section::unit:
        case Section::counit: {
          const std::size_t k = c.index(*dim);
          (section == Section::unit ? unit : counit)[k] = c.scalar(*order);
          break;
        }
        case Section::antipode: {
          const std::size_t i = c.index(*dim), j = c.index(*dim);
          antipode(i, j) = c.scalar(*order);
          break;
        }
        case Section::header:
          break;
      }
    }
    if (end == text.size()) break;
  }
  if (name.empty()) throw ParseError("missing 'hopf <name>' header", 0, 0);
  if (!dim) throw ParseError("missing 'dim' header", 0, 0);
  Cursor tail{{}, 0, line_no};
  allocate(tail);
  try {
    return HopfData(name, *order, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                    std::move(antipode));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

HopfData read_hopf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hopf(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

std::string format_hopf(const HopfData& h) {
  const std::size_t d = h.dim();
  const unsigned n = h.cyclotomic_order();
  std::ostringstream out;
  out << "hopf " << h.name() << "\n";
  out << "dim " << d << "\n";
  out << "cyclotomic " << n << "\n";
  out << "MULT\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const Term& t : h.product(i, j)) out << i << ' ' << j << ' ' << t.index << ' ' << t.value.to_string(n) << "\n";
  out << "COMULT\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const CycScalar& c = h.comult()(i, j, k);
        if (!c.is_zero()) out << i << ' ' << j << ' ' << k << ' ' << c.to_string(n) << "\n";
      }
  out << "UNIT\n";
  for (std::size_t k = 0; k < d; ++k)
    if (!h.unit()[k].is_zero()) out << k << ' ' << h.unit()[k].to_string(n) << "\n";
  out << "COUNIT\n";
  for (std::size_t k = 0; k < d; ++k)
    if (!h.counit()[k].is_zero()) out << k << ' ' << h.counit()[k].to_string(n) << "\n";
  out << "ANTIPODE\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!h.antipode()(i, j).is_zero()) out << i << ' ' << j << ' ' << h.antipode()(i, j).to_string(n) << "\n";
  return out.str();
}

void write_hopf_file(const HopfData& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_hopf(h);
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace hopfkit
