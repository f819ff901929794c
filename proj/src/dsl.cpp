#include "opkit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace opkit::dsl {

std::string_view code_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::lexical: return "E001";
    case DiagnosticCode::syntax: return "E002";
    case DiagnosticCode::unsupported_generator: return "E010";
    case DiagnosticCode::invalid_coefficient: return "E011";
    case DiagnosticCode::zero_relation: return "E012";
    case DiagnosticCode::arity_mismatch: return "E101";
    case DiagnosticCode::labels_not_permutation: return "E102";
    case DiagnosticCode::non_quadratic: return "E103";
  }
  return "E000";
}

std::string Diagnostic::format(std::string_view origin) const {
  return std::string(origin) + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": error[" +
         std::string(code_string(code)) + "]: " + message;
}

SourceText SourceText::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return {ss.str(), path.string()};
}

SourceSpan SourceText::span_at(std::size_t offset, std::size_t length) const {
  SourceSpan s{offset, length, 1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++s.line;
      s.column = 1;
    } else {
      ++s.column;
    }
  }
  return s;
}

namespace {

enum class Tok { word, lparen, rparen, lbrace, rbrace, semicolon, plus, minus, star, slash, equals, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::word: return "a name or number";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semicolon: return "';'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::equals: return "'='";
    case Tok::end: return "end of input";
  }
  return "token";
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  explicit Parser(const SourceText& src) : src_(src) { lex(); }

  QuadraticPresentation run() {
    QuadraticPresentation p;
    expect_keyword("operad");
    p.name = std::string(expect(Tok::word, "operad name").text);
    expect(Tok::lbrace, "'{'");
    expect_keyword("generator");
    p.generator_name = std::string(expect(Tok::word, "generator name").text);
    expect_keyword("arity");
    const auto arity_tok = expect(Tok::word, "generator arity");
    expect_keyword("degree");
    const auto degree_tok = expect(Tok::word, "generator degree");
    expect(Tok::semicolon, "';'");
    const int arity = small_int(arity_tok);
    const int degree = small_int(degree_tok);
    if (arity < 2) fail(DiagnosticCode::unsupported_generator, arity_tok, "generator arity must be at least 2");
    if (degree != 0 && degree != 1)
      fail(DiagnosticCode::unsupported_generator, degree_tok, "generator degree must be 0 or 1");
    p.generator = GeneratorSpec(arity, degree);

    while (peek().kind == Tok::word && peek().text == "relation") p.relations.push_back(relation(p));
    expect(Tok::rbrace, "'relation' or '}'");
    expect(Tok::end, "end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(DiagnosticCode code, std::size_t offset, std::size_t length, std::string message) const {
    throw ParseError(Diagnostic{code, std::move(message), src_.span_at(offset, length)}, src_.origin);
  }
  [[noreturn]] void fail(DiagnosticCode code, const Token& t, std::string message) const {
    fail(code, t.offset, std::max<std::size_t>(t.text.size(), 1), std::move(message));
  }

  void lex() {
    const auto& s = src_.text;
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      if (is_word_char(c)) {
        auto start = i;
        while (i < s.size() && is_word_char(s[i])) ++i;
        toks_.push_back({Tok::word, std::string_view(s).substr(start, i - start), start});
        continue;
      }
      // U+2212 MINUS SIGN
      if (s.compare(i, 3, "\xE2\x88\x92") == 0) {
        toks_.push_back({Tok::minus, std::string_view(s).substr(i, 3), i});
        i += 3;
        continue;
      }
      Tok k;
      switch (c) {
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case '{': k = Tok::lbrace; break;
        case '}': k = Tok::rbrace; break;
        case ';': k = Tok::semicolon; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '=': k = Tok::equals; break;
        default: fail(DiagnosticCode::lexical, i, 1, std::string("unexpected character '") + c + "'");
      }
      toks_.push_back({k, std::string_view(s).substr(i, 1), i});
      ++i;
    }
    toks_.push_back({Tok::end, {}, s.size()});
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok kind, std::string_view what) {
    const auto& t = peek();
    if (t.kind != kind)
      fail(DiagnosticCode::syntax, t,
           "expected " + std::string(what) + ", found " +
               (t.kind == Tok::word ? "'" + std::string(t.text) + "'" : std::string(describe(t.kind))));
    return next();
  }

  void expect_keyword(std::string_view kw) {
    const auto& t = peek();
    if (t.kind != Tok::word || t.text != kw)
      fail(DiagnosticCode::syntax, t,
           "expected '" + std::string(kw) + "', found " +
               (t.kind == Tok::word ? "'" + std::string(t.text) + "'" : std::string(describe(t.kind))));
    next();
  }

  int small_int(const Token& t) const {
    if (!all_digits(t.text) || t.text.size() > 6) fail(DiagnosticCode::syntax, t, "expected a small integer");
    return std::stoi(std::string(t.text));
  }

  Element relation(const QuadraticPresentation& p) {
    const auto start = next().offset;  // 'relation'
    const int n = p.generator.arity;
    Element rel(2 * n - 1);
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        sign = next().kind == Tok::minus ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      Rational coeff = sign * coefficient();
      rel.add_term(monomial(n), coeff);
    }
    expect(Tok::equals, "'+', '-' or '='");
    const auto zero = expect(Tok::word, "'0'");
    if (zero.text != "0") fail(DiagnosticCode::syntax, zero, "relations must be written as '... = 0'");
    const auto end = expect(Tok::semicolon, "';'");
    if (rel.is_zero())
      fail(DiagnosticCode::zero_relation, start, end.offset + 1 - start, "relation is identically zero");
    return rel;
  }

  Rational coefficient() {
    if (peek().kind != Tok::word) return 1;
    const auto num = next();
    if (!all_digits(num.text)) fail(DiagnosticCode::syntax, num, "expected a coefficient or '('");
    Integer numerator(std::string(num.text));
    Integer denominator = 1;
    if (peek().kind == Tok::slash) {
      next();
      const auto den = expect(Tok::word, "denominator");
      if (!all_digits(den.text)) fail(DiagnosticCode::syntax, den, "expected a denominator");
      denominator = Integer(std::string(den.text));
      if (denominator == 0) fail(DiagnosticCode::invalid_coefficient, den, "zero denominator");
    }
    expect(Tok::star, "'*' after coefficient");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
  }

  TreeMonomial monomial(int n) {
    const auto start = peek().offset;
    std::string shape;
    std::vector<int> labels;
    int vertices = 0;
    node(n, shape, labels, vertices);
    const auto length = toks_[pos_ - 1].offset + 1 - start;
    if (vertices != 2)
      fail(DiagnosticCode::non_quadratic, start, length,
           "non-quadratic relation: monomial has " + std::to_string(vertices) +
               " generator vertices, expected 2");
    if (!is_permutation_of_range(labels))
      fail(DiagnosticCode::labels_not_permutation, start, length,
           "leaf labels must be a permutation of x1..x" + std::to_string(labels.size()));
    return TreeMonomial(TreeShape::parse(shape), std::move(labels));
  }

  void node(int n, std::string& shape, std::vector<int>& labels, int& vertices) {
    const auto open = expect(Tok::lparen, "'('");
    shape += '(';
    ++vertices;
    int children = 0;
    while (peek().kind != Tok::rparen) {
      const auto& t = peek();
      if (t.kind == Tok::lparen) {
        node(n, shape, labels, vertices);
      } else if (t.kind == Tok::word && t.text.size() >= 2 && t.text[0] == 'x' && all_digits(t.text.substr(1)) &&
                 t.text.size() <= 7) {
        labels.push_back(std::stoi(std::string(t.text.substr(1))));
        shape += '*';
        next();
      } else {
        fail(DiagnosticCode::syntax, t,
             "expected a leaf x<k>, '(' or ')', found " +
                 (t.kind == Tok::word ? "'" + std::string(t.text) + "'" : std::string(describe(t.kind))));
      }
      ++children;
    }
    if (children == 0) fail(DiagnosticCode::syntax, peek(), "empty product '()'");
    const auto close = next();
    shape += ')';
    if (children != n)
      fail(DiagnosticCode::arity_mismatch, open.offset, close.offset + 1 - open.offset,
           "product has " + std::to_string(children) + " inputs but the generator has arity " + std::to_string(n));
  }

  const SourceText& src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticPresentation parse(const SourceText& src) { return Parser(src).run(); }

SourceText print(const QuadraticPresentation& p) {
  p.validate();
  std::string out = "operad " + p.name + " {\n";
  out += "  generator " + p.generator_name + " arity " + std::to_string(p.generator.arity) + " degree " +
         std::to_string(p.generator.degree) + ";\n";
  for (const auto& rel : p.relations) {
    out += "  relation ";
    bool first = true;
    for (const auto& [m, c] : rel.terms()) {
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      Rational mag = abs(c);
      if (mag != 1) out += to_short_string(mag) + "*";
      out += m.to_string();
    }
    out += " = 0;\n";
  }
  out += "}\n";
  return {out, p.name + ".opd"};
}

}  // namespace opkit::dsl
