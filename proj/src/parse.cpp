#include "borel/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace borel {

namespace {

struct RawTerm {
  int index;
  int exponent;
};

using RawMonomial = std::vector<RawTerm>; // empty = the monomial 1

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  bool eat_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int parse_uint(const char* what) {
    skip_ws();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, pos_);
  }

  RawMonomial parse_monomial() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    RawMonomial terms;
    terms.push_back(parse_term());
    while (eat('*')) terms.push_back(parse_term());
    return terms;
  }

  RawTerm parse_term() {
    skip_ws();
    int index;
    char c = peek();
    if (c == 'x') {
      ++pos_;
      index = parse_uint("variable index after 'x'");
      if (index < 1) fail("variable index must be at least 1");
    } else if (c >= 'a' && c <= 'z') {
      ++pos_;
      index = c - 'a' + 1;
    } else {
      fail("expected a variable");
    }
    int exponent = 1;
    if (eat('^')) {
      exponent = parse_uint("exponent after '^'");
      if (exponent < 1) fail("exponent must be at least 1");
    }
    return RawTerm{index, exponent};
  }

private:
  std::string_view text_;
  size_t pos_ = 0;
};

int max_index(const RawMonomial& m) {
  int best = 0;
  for (const RawTerm& t : m) best = std::max(best, t.index);
  return best;
}

Monomial realize(const RawMonomial& raw, int nvars) {
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  for (const RawTerm& t : raw) {
    if (t.index > nvars)
      throw domain_error("variable index exceeds the ambient nvars");
    exps[static_cast<size_t>(t.index) - 1] += t.exponent;
  }
  return Monomial(nvars, std::move(exps));
}

int resolve_nvars(int mentioned, std::optional<int> at_suffix, std::optional<int> override_n) {
  int n = std::max(mentioned, 1);
  for (const std::optional<int>& declared : {at_suffix, override_n}) {
    if (!declared) continue;
    if (*declared < mentioned)
      throw domain_error("declared nvars is below a mentioned variable index");
    n = std::max(n, *declared);
  }
  return n;
}

} // namespace

Monomial parse_monomial(std::string_view text, std::optional<int> nvars_override) {
  Scanner scan(text);
  RawMonomial raw = scan.parse_monomial();
  scan.skip_ws();
  if (!scan.done()) scan.fail("unexpected trailing input");
  return realize(raw, resolve_nvars(max_index(raw), {}, nvars_override));
}

BorelIdeal parse_ideal(std::string_view text, std::optional<int> nvars_override) {
  Scanner scan(text);
  bool squarefree = false;
  if (scan.eat_word("sfborel")) {
    squarefree = true;
  } else if (!scan.eat_word("borel")) {
    scan.fail("expected 'borel{...}' or 'sfborel{...}'");
  }
  scan.expect('{', "'{'");
  std::vector<RawMonomial> raws;
  scan.skip_ws();
  if (scan.peek() != '}') {
    raws.push_back(scan.parse_monomial());
    while (scan.eat(',')) raws.push_back(scan.parse_monomial());
  }
  scan.expect('}', "'}'");
  std::optional<int> at_suffix;
  if (scan.eat('@')) at_suffix = scan.parse_uint("nvars after '@'");
  scan.skip_ws();
  if (!scan.done()) scan.fail("unexpected trailing input");

  int mentioned = 0;
  for (const RawMonomial& raw : raws) mentioned = std::max(mentioned, max_index(raw));
  const int nvars = resolve_nvars(mentioned, at_suffix, nvars_override);

  std::vector<Monomial> gens;
  gens.reserve(raws.size());
  for (const RawMonomial& raw : raws) gens.push_back(realize(raw, nvars));
  return squarefree ? BorelIdeal::sqfree(std::move(gens), nvars)
                    : BorelIdeal::borel(std::move(gens), nvars);
}

ParsedExpr parse_expr(std::string_view text, std::optional<int> nvars_override) {
  size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (text.substr(start).starts_with("borel") || text.substr(start).starts_with("sfborel"))
    return ParsedExpr{parse_ideal(text, nvars_override), {}};
  return ParsedExpr{{}, parse_monomial(text, nvars_override)};
}

} // namespace borel
