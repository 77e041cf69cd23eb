#include "permeq/notation.hpp"

#include <cctype>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "permeq/errors.hpp"

namespace permeq {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space(bool allow_comma) {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) ||
                       (allow_comma && peek() == ',')))
      advance();
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word)
      return false;
    for (std::size_t k = 0; k < word.size(); ++k)
      advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, column_, what);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct Located {
  std::uint64_t value;
  std::size_t line;
  std::size_t column;
};

// Parses the cycles without checking them against a degree.
std::vector<std::vector<Located>> scan_cycles(std::string_view text) {
  Scanner s(text);
  std::vector<std::vector<Located>> cycles;
  s.skip_space(false);
  if (s.consume_word("id")) {
    s.skip_space(false);
    if (!s.done())
      s.fail("unexpected text after 'id'");
    return cycles;
  }
  if (s.done())
    s.fail("empty permutation; write () or id for the identity");

  while (true) {
    s.skip_space(false);
    if (s.done())
      break;
    if (s.peek() != '(')
      s.fail(std::string("expected '(' but found '") + s.peek() + "'");
    s.advance();
    std::vector<Located> cycle;
    while (true) {
      s.skip_space(true);
      if (s.done())
        s.fail("unterminated cycle, expected ')'");
      if (s.peek() == ')') {
        s.advance();
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(s.peek())))
        s.fail(std::string("expected a point but found '") + s.peek() + "'");
      Located pt{0, s.line(), s.column()};
      while (!s.done() && std::isdigit(static_cast<unsigned char>(s.peek()))) {
        pt.value = pt.value * 10 + static_cast<std::uint64_t>(s.peek() - '0');
        if (pt.value > UINT32_MAX)
          throw ParseError(pt.line, pt.column, "point is too large");
        s.advance();
      }
      cycle.push_back(pt);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t n) {
  const auto cycles = scan_cycles(text);
  if (n == 0)
    throw ParseError(1, 1, "degree must be positive");
  std::vector<Point> image(n);
  for (std::size_t i = 0; i < n; ++i)
    image[i] = static_cast<Point>(i + 1);
  std::vector<bool> used(n, false);

  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Located& pt = cycle[k];
      if (pt.value < 1 || pt.value > n)
        throw ParseError(pt.line, pt.column,
                         "point " + std::to_string(pt.value) +
                             " is outside 1.." + std::to_string(n));
      if (used[pt.value - 1])
        throw ParseError(pt.line, pt.column,
                         "point " + std::to_string(pt.value) +
                             " appears more than once");
      used[pt.value - 1] = true;
      image[pt.value - 1] =
          static_cast<Point>(cycle[(k + 1) % cycle.size()].value);
    }
  }
  return Perm::from_image(std::move(image));
}

std::size_t largest_point(std::string_view text) {
  std::uint64_t best = 0;
  for (const auto& cycle : scan_cycles(text))
    for (const Located& pt : cycle)
      best = std::max(best, pt.value);
  return static_cast<std::size_t>(best);
}

std::string format_cycle(const Cycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.length(); ++k) {
    if (k != 0)
      out += ' ';
    out += std::to_string(c.elements[k]);
  }
  out += ')';
  return out;
}

std::string format_cycles(const Perm& p, bool verbose) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(p)) {
    if (c.length() == 1 && !verbose)
      continue;
    out += format_cycle(c);
  }
  return out.empty() ? "()" : out;
}

}  // namespace permeq
