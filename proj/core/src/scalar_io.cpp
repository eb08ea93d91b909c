#include "hopfkit/scalar_io.hpp"

#include <cctype>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, unsigned order) : text_(text), order_(order) {}

  CycScalar parse() {
    skip_space();
    if (at_end()) fail("empty scalar literal");
    CycScalar total;
    bool first = true;
    while (true) {
      skip_space();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      CycScalar t = term();
      total += negative ? -t : t;
      skip_space();
      if (at_end()) break;
    }
    return total;
  }

 private:
  CycScalar term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip_space();
      if (peek() != '*') return CycScalar(coeff);
      ++pos_;
      skip_space();
    }
    if (peek() != 'z') fail(have_coeff ? "expected 'z' after '*'" : "expected a number or 'z'");
    ++pos_;
    long exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      exponent = integer_value();
    }
    return CycScalar(coeff) * CycScalar::zeta(order_, exponent);
  }

  Rational rational() {
    const Integer num(digits());
    skip_space();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_space();
    const Integer den(digits());
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  long integer_value() {
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stol(d);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("invalid scalar '" + std::string(text_) + "': " + message + " at column " + std::to_string(pos_ + 1), 0, 0);
  }

  std::string_view text_;
  unsigned order_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text, unsigned order) { return ScalarParser(text, order).parse(); }

}  // namespace hopfkit
