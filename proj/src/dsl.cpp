#include "operad/dsl.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace operad {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

enum class Tok { ident, number, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::end;
        out.push_back(t);
        return out;
      }
      const auto c = static_cast<unsigned char>(src_[pos_]);
      if (ident_start(c)) {
        t.kind = Tok::ident;
        while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) t.text += take();
      } else if (std::isdigit(c)) {
        t.kind = Tok::number;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += take();
      } else if (std::string_view("(){},;:=+-*/").find(static_cast<char>(c)) != std::string_view::npos) {
        t.kind = Tok::symbol;
        t.text = std::string(1, take());
      } else {
        diags.push_back({line_, column_, std::string("unexpected character '") + static_cast<char>(c) + "'", Severity::error});
        take();
        continue;
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct SyntaxError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

  std::vector<Presentation> file() {
    std::vector<Presentation> out;
    std::set<std::string> names;
    while (peek().kind != Tok::end) {
      const Token start = peek();
      if (!is_ident("operad")) {
        error(start, "expected 'operad'");
        // Resynchronise on the next definition.
        while (peek().kind != Tok::end && !is_ident("operad")) ++i_;
        continue;
      }
      ++i_;
      const Token name = peek();
      auto p = operad_body();
      if (!p) continue;
      if (!names.insert(p->name).second) {
        error(name, "duplicate operad name " + p->name);
        continue;
      }
      out.push_back(std::move(*p));
    }
    return out;
  }

  RelVector relation(const GeneratorSet& g) {
    RelVector v = lincomb(g);
    expect_symbol("=");
    v -= lincomb(g);
    return v;
  }

  void expect_end() {
    if (peek().kind != Tok::end) throw SyntaxError{at(peek(), "unexpected '" + peek().text + "' after relation")};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::symbol && peek(ahead).text == s;
  }
  bool is_ident(std::string_view s) const { return peek().kind == Tok::ident && peek().text == s; }

  static Diagnostic at(const Token& t, std::string message) { return {t.line, t.column, std::move(message), Severity::error}; }
  void error(const Token& t, std::string message) { diags_.push_back(at(t, std::move(message))); }

  static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) throw SyntaxError{at(peek(), "expected '" + std::string(s) + "', found " + describe(peek()))};
    ++i_;
  }
  void expect_ident(std::string_view s) {
    if (!is_ident(s)) throw SyntaxError{at(peek(), "expected '" + std::string(s) + "', found " + describe(peek()))};
    ++i_;
  }
  Token ident() {
    if (peek().kind != Tok::ident) throw SyntaxError{at(peek(), "expected an identifier, found " + describe(peek()))};
    return toks_[i_++];
  }

  std::optional<Presentation> operad_body() {
    std::string name;
    std::optional<GeneratorSet> gens;
    try {
      name = ident().text;
      expect_symbol("{");
      expect_ident("ops");
      expect_symbol(":");
      std::vector<std::string> ops;
      std::set<std::string> seen;
      do {
        const Token t = ident();
        if (!seen.insert(t.text).second) throw SyntaxError{at(t, "duplicate operation " + t.text)};
        ops.push_back(t.text);
      } while (is_symbol(",") && (++i_, true));
      expect_symbol(";");
      gens = GeneratorSet(std::move(ops));
    } catch (const SyntaxError& e) {
      diags_.push_back(e.diagnostic);
      skip_past_close();
      return std::nullopt;
    }

    std::vector<RelVector> rels;
    bool failed = false;
    while (!is_symbol("}")) {
      if (peek().kind == Tok::end) {
        error(peek(), "expected '}' to close operad " + name);
        return std::nullopt;
      }
      try {
        expect_ident("rel");
        expect_symbol(":");
        rels.push_back(relation(*gens));
        expect_symbol(";");
      } catch (const SyntaxError& e) {
        diags_.push_back(e.diagnostic);
        failed = true;
        while (peek().kind != Tok::end && !is_symbol(";") && !is_symbol("}")) ++i_;
        if (is_symbol(";")) ++i_;
      }
    }
    ++i_;  // '}'
    if (failed) return std::nullopt;
    return Presentation(name, std::move(*gens), rels);
  }

  void skip_past_close() {
    while (peek().kind != Tok::end && !is_symbol("}")) ++i_;
    if (is_symbol("}")) ++i_;
  }

  RelVector lincomb(const GeneratorSet& g) {
    RelVector v = RelVector::Zero(g.quadratic_dim());
    if (peek().kind == Tok::number && peek().text == "0" && !is_symbol("*", 1) && !is_symbol("/", 1)) {
      ++i_;
      return v;
    }
    Rational sign(1);
    if (is_symbol("-")) {
      sign = -1;
      ++i_;
    }
    term(g, sign, v);
    while (is_symbol("+") || is_symbol("-")) {
      const Rational s(is_symbol("-") ? -1 : 1);
      ++i_;
      term(g, s, v);
    }
    return v;
  }

  void term(const GeneratorSet& g, const Rational& sign, RelVector& v) {
    Rational coeff(1);
    if (peek().kind == Tok::number) {
      coeff = rational();
      expect_symbol("*");
    }
    v(monomial(g)) += sign * coeff;
  }

  Rational rational() {
    const Token num = toks_[i_++];
    BigInt n(num.text);
    BigInt d(1);
    if (is_symbol("/")) {
      ++i_;
      if (peek().kind != Tok::number) throw SyntaxError{at(peek(), "expected a denominator, found " + describe(peek()))};
      const Token den = toks_[i_++];
      d = BigInt(den.text);
      if (d == 0) throw SyntaxError{at(den, "denominator must be positive")};
    }
    return Rational(n, d);
  }

  void variable(std::string_view v) {
    if (!is_ident(v)) throw SyntaxError{at(peek(), "malformed monomial: expected variable " + std::string(v) + ", found " + describe(peek()))};
    ++i_;
  }

  std::size_t op(const GeneratorSet& g) {
    if (peek().kind != Tok::ident) throw SyntaxError{at(peek(), "malformed monomial: expected an operation, found " + describe(peek()))};
    const Token t = toks_[i_++];
    const auto k = g.find(t.text);
    if (!k) throw SyntaxError{at(t, "undeclared operation " + t.text)};
    return *k;
  }

  Index monomial(const GeneratorSet& g) {
    if (is_symbol("(")) {
      ++i_;
      variable("x");
      const std::size_t a = op(g);
      variable("y");
      expect_symbol(")");
      const std::size_t b = op(g);
      variable("z");
      return g.left(a, b);
    }
    if (!is_ident("x")) throw SyntaxError{at(peek(), "malformed monomial: expected '(' or x, found " + describe(peek()))};
    ++i_;
    const std::size_t a = op(g);
    expect_symbol("(");
    variable("y");
    const std::size_t b = op(g);
    variable("z");
    expect_symbol(")");
    return g.right(a, b);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<Diagnostic>& diags_;
};

std::string sanitize(std::string_view name) {
  std::string out;
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (ident_char(c)) {
      out += ch;
    } else if (ch == '*') {
      out += "_star";
    } else if (ch == '!') {
      out += "_dual";
    } else if (ch == '[') {
      out += "_sq_";
    } else if (ch == ']') {
    } else if (out.empty() || out.back() != '_') {
      out += '_';
    }
  }
  while (out.size() > 1 && out.back() == '_') out.pop_back();
  if (out.empty() || !ident_start(static_cast<unsigned char>(out.front()))) out = "op" + out;
  return out;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!ident_char(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string format_diagnostic(const Diagnostic& d, std::string_view source_name) {
  return std::string(source_name) + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::error ? "error: " : "warning: ") + d.message;
}

bool ParseResult::ok() const {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::error) return false;
  }
  return true;
}

const Presentation* ParseResult::find(std::string_view name) const {
  for (const auto& p : operads) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

ParseResult parse(std::string_view text) {
  ParseResult result;
  auto tokens = Lexer(text).run(result.diagnostics);
  Parser parser(std::move(tokens), result.diagnostics);
  result.operads = parser.file();
  return result;
}

RelVector parse_relation(std::string_view text, const GeneratorSet& generators) {
  std::vector<Diagnostic> diags;
  auto tokens = Lexer(text).run(diags);
  if (!diags.empty()) throw relation_parse_error(diags.front());
  Parser parser(std::move(tokens), diags);
  try {
    RelVector v = parser.relation(generators);
    parser.expect_end();
    return v;
  } catch (const SyntaxError& e) {
    throw relation_parse_error(e.diagnostic);
  }
}

std::vector<std::string> printable_names(const GeneratorSet& g) {
  const auto all_valid = [](const std::vector<std::string>& ns) {
    if (ns.empty()) return false;
    std::set<std::string> seen;
    for (const auto& n : ns) {
      if (!is_identifier(n) || n == "x" || n == "y" || n == "z" || !seen.insert(n).second) return false;
    }
    return true;
  };
  if (all_valid(g.names())) return g.names();
  if (all_valid(g.aliases())) return g.aliases();
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& n : g.names()) {
    std::string s = sanitize(n);
    if (s == "x" || s == "y" || s == "z") s += "_op";
    std::string candidate = s;
    for (int k = 2; !seen.insert(candidate).second; ++k) candidate = s + "_" + std::to_string(k);
    out.push_back(candidate);
  }
  return out;
}

namespace {

std::string side(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, mono] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " * ";
    out += mono;
  }
  return out;
}

}  // namespace

std::string format_relation(const RelVector& v, const GeneratorSet& g) {
  const auto names = printable_names(g);
  const std::size_t n = g.size();
  std::vector<std::pair<Rational, std::string>> lhs, rhs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = v(g.left(a, b));
      if (c != 0) lhs.emplace_back(c, "(x " + names[a] + " y) " + names[b] + " z");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = v(g.right(a, b));
      if (c != 0) rhs.emplace_back(-c, "x " + names[a] + " (y " + names[b] + " z)");
    }
  }
  return side(lhs) + " = " + side(rhs);
}

std::string print(const Presentation& p) {
  const auto names = printable_names(p.generators);
  std::string out = "operad " + sanitize(p.name) + " {\n  ops: ";
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? ", " : "") + names[k];
  out += ";\n";
  for (Index r = 0; r < p.relations.dim(); ++r) {
    out += "  rel: " + format_relation(p.relations.basis().row(r).transpose(), p.generators) + ";\n";
  }
  return out + "}\n";
}

}  // namespace operad
