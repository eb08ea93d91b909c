#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

/// A finite group given by its Cayley table: table[i][j] is the index of g_i g_j.
struct GroupTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  unsigned exponent = 1;  // lcm of element orders

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  unsigned element_order(std::size_t g) const;
  std::size_t conjugate(std::size_t g, std::size_t by) const;  // by g by^-1
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  std::vector<std::size_t> centralizer(std::size_t g) const;
};

/// Validate a raw table and fill identity, inverses and exponent.
/// Throws Error for Latin-square, identity or associativity violations.
GroupTable make_group(std::string name, std::vector<std::string> elements,
                      std::vector<std::vector<std::size_t>> table);

/// Parse the `.grp` format:
///
///   group <name>
///   order <n>
///   elements <n names>
///   table
///   <n rows of n names>
///
/// `#` starts a comment. Throws ParseError with line and column.
GroupTable parse_group(std::string_view text);
GroupTable read_group_file(const std::string& path);

std::string format_group(const GroupTable& g);

/// Built-in examples: C2, C3, C4, C2xC2, S3, D4, Q8.
std::vector<std::string> builtin_group_names();
GroupTable builtin_group(const std::string& name);

/// Cyclic group of order n.
GroupTable cyclic_group(unsigned n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

}  // namespace hopfkit
