#include "ramify/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Semi, Colon, Arrow, End };

const char* tok_name(Tok t) {
  switch (t) {
  case Tok::Ident: return "identifier";
  case Tok::Int: return "integer";
  case Tok::Plus: return "'+'";
  case Tok::Minus: return "'-'";
  case Tok::Star: return "'*'";
  case Tok::Slash: return "'/'";
  case Tok::Caret: return "'^'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Comma: return "','";
  case Tok::Semi: return "';'";
  case Tok::Colon: return "':'";
  case Tok::Arrow: return "'->'";
  case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, c = col;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '.')) {
        throw ParseError(src[j] == '.' ? "decimal numbers are not supported; use a fraction"
                                       : "implicit multiplication is not supported; use '*'",
                         line, col + (j - i));
      }
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (ch) {
    case '+': kind = Tok::Plus; break;
    case '-':
      if (i + 1 < src.size() && src[i + 1] == '>') {
        kind = Tok::Arrow;
        len = 2;
      } else {
        kind = Tok::Minus;
      }
      break;
    case '*': kind = Tok::Star; break;
    case '/': kind = Tok::Slash; break;
    case '^': kind = Tok::Caret; break;
    case '(': kind = Tok::LParen; break;
    case ')': kind = Tok::RParen; break;
    case ',': kind = Tok::Comma; break;
    case ';': kind = Tok::Semi; break;
    case ':': kind = Tok::Colon; break;
    default: {
      std::string shown = std::isprint(ch) ? std::string(1, static_cast<char>(ch))
                                           : "\\x" + std::to_string(static_cast<int>(ch));
      throw ParseError("unexpected character '" + shown + "'", l, c);
    }
    }
    out.push_back({kind, std::string(src.substr(i, len)), l, c});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

constexpr unsigned kMaxExponent = 1000;
constexpr unsigned kMaxNesting = 200;

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* context) {
    if (!at(k)) fail(std::string("expected ") + tok_name(k) + " " + context + ", found " + describe(peek()));
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.column);
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return std::string(tok_name(t.kind)) + " '" + t.text + "'";
    return tok_name(t.kind);
  }

  Polynomial poly(const RingPtr& ring, unsigned depth = 0) {
    if (depth > kMaxNesting) fail("expression nested too deeply");
    bool negate = false;
    if (accept(Tok::Minus)) negate = true;
    else accept(Tok::Plus);
    Polynomial acc = term(ring, depth);
    if (negate) acc = -acc;
    for (;;) {
      if (accept(Tok::Plus)) acc += term(ring, depth);
      else if (accept(Tok::Minus)) acc -= term(ring, depth);
      else break;
    }
    return acc;
  }

  Scalar rational() {
    const Token& num = expect(Tok::Int, "in number");
    Scalar value(mpz_class(num.text));
    if (accept(Tok::Slash)) {
      const Token& den = expect(Tok::Int, "as denominator");
      mpz_class d(den.text);
      if (d == 0) fail_at("zero denominator", den);
      value /= Scalar(d);
    }
    return value;
  }

  Scalar signed_rational() {
    bool neg = false;
    if (accept(Tok::Minus)) neg = true;
    else accept(Tok::Plus);
    Scalar v = rational();
    return neg ? Scalar(-v) : v;
  }

  std::vector<std::string> ident_list(Tok terminator, const char* context) {
    std::vector<std::string> names;
    for (;;) {
      names.push_back(expect(Tok::Ident, context).text);
      if (!accept(Tok::Comma)) break;
    }
    if (!at(terminator)) fail(std::string("expected ',' or ") + tok_name(terminator) + " " + context);
    return names;
  }

  ProjectivePoint point() {
    const Token& open = expect(Tok::LParen, "to start a point");
    std::vector<Scalar> coords;
    coords.push_back(signed_rational());
    while (accept(Tok::Colon)) coords.push_back(signed_rational());
    expect(Tok::RParen, "to close a point");
    try {
      return ProjectivePoint(std::move(coords));
    } catch (const std::invalid_argument&) {
      fail_at("projective point cannot have all coordinates zero", open);
    }
  }

  Partition partition() {
    const Token& open = expect(Tok::LParen, "to start a partition");
    std::vector<unsigned> parts;
    for (;;) {
      const Token& t = expect(Tok::Int, "as partition part");
      if (t.text.size() > 4 || std::stoul(t.text) == 0) fail_at("partition parts must be in 1..9999", t);
      parts.push_back(static_cast<unsigned>(std::stoul(t.text)));
      if (!accept(Tok::Comma)) break;
    }
    expect(Tok::RParen, "to close a partition");
    (void)open;
    return Partition(std::move(parts));
  }

  std::size_t position() const { return pos_; }

private:
  Polynomial term(const RingPtr& ring, unsigned depth) {
    Polynomial acc = factor(ring, depth);
    while (accept(Tok::Star)) acc *= factor(ring, depth);
    return acc;
  }

  Polynomial factor(const RingPtr& ring, unsigned depth) {
    Polynomial b = base(ring, depth);
    if (accept(Tok::Caret)) {
      const Token& t = peek();
      if (t.kind != Tok::Int) fail("malformed exponent: expected a nonnegative integer, found " + describe(t));
      ++pos_;
      if (t.text.size() > 4 || std::stoul(t.text) > kMaxExponent)
        fail_at("malformed exponent: exponent exceeds " + std::to_string(kMaxExponent), t);
      if (at(Tok::Slash)) fail("malformed exponent: fractional exponents are not supported");
      b = b.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return b;
  }

  Polynomial base(const RingPtr& ring, unsigned depth) {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Int:
      return Polynomial::constant(ring, rational());
    case Tok::Ident: {
      ++pos_;
      if (!ring->contains(t.text)) {
        std::string msg = "unknown variable '" + t.text + "'";
        for (const auto& n : ring->names()) {
          if (t.text.size() > n.size() && t.text.compare(0, n.size(), n) == 0) {
            msg += " (implicit multiplication is not supported; use '*')";
            break;
          }
        }
        fail_at(msg, t);
      }
      return Polynomial::variable(ring, t.text);
    }
    case Tok::LParen: {
      ++pos_;
      Polynomial inner = poly(ring, depth + 1);
      expect(Tok::RParen, "to close parenthesis");
      return inner;
    }
    default:
      fail("expected a number, variable or '(', found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

std::optional<ProjectivePoint> Parametrization::point_at(const std::vector<Scalar>& values) const {
  std::vector<Scalar> coords;
  for (const auto& img : images) coords.push_back(evaluate(img, std::span<const Scalar>(values)));
  if (std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return c == 0; })) return std::nullopt;
  return ProjectivePoint(std::move(coords));
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser p(tokenize(text));
  Polynomial f = p.poly(ring);
  if (!p.at(Tok::End)) p.fail("unexpected " + Parser::describe(p.peek()) + " after polynomial");
  return f;
}

ProjectivePoint parse_point(std::string_view text) {
  Parser p(tokenize(text));
  ProjectivePoint q = p.point();
  if (!p.at(Tok::End)) p.fail("unexpected " + Parser::describe(p.peek()) + " after point");
  return q;
}

ProblemFile parse_problem(std::string_view text) {
  Parser p(tokenize(text));
  RingPtr ring;
  std::optional<std::vector<Polynomial>> gens;
  std::optional<ProjectivePoint> center;
  std::optional<Token> center_token;
  std::vector<ProjectivePoint> points;
  std::vector<Partition> partitions;
  std::optional<Parametrization> param;
  std::vector<std::string> seen;

  while (!p.at(Tok::End)) {
    const Token kw = p.expect(Tok::Ident, "as section keyword");
    const std::string& name = kw.text;
    if (std::find(seen.begin(), seen.end(), name) != seen.end())
      Parser::fail_at("duplicate section '" + name + "'", kw);
    seen.push_back(name);
    if (name != "ring" && !ring)
      Parser::fail_at(name == "ideal" || name == "center" || name == "points" || name == "partitions" ||
                              name == "parametrization"
                          ? "section '" + name + "' must follow the ring declaration"
                          : "unknown section '" + name + "'",
                      kw);
    if (name == "ring") {
      auto names = p.ident_list(Tok::Semi, "in ring declaration");
      try {
        ring = make_ring(names);
      } catch (const std::exception& e) {
        Parser::fail_at(e.what(), kw);
      }
    } else if (name == "ideal") {
      std::vector<Polynomial> list;
      for (;;) {
        const Token start = p.peek();
        Polynomial g = p.poly(ring);
        if (!g.is_zero() && !g.is_homogeneous())
          throw InputRejected("NOT_HOMOGENEOUS", "generator at " + std::to_string(start.line) + ":" +
                                                     std::to_string(start.column) +
                                                     " is not homogeneous: " + g.str());
        list.push_back(std::move(g));
        if (!p.accept(Tok::Comma)) break;
      }
      gens = std::move(list);
    } else if (name == "center") {
      center_token = p.peek();
      center = p.point();
      if (center->size() != ring->size())
        Parser::fail_at("center has " + std::to_string(center->size()) + " coordinates, ring has " +
                            std::to_string(ring->size()) + " variables",
                        *center_token);
    } else if (name == "points") {
      for (;;) {
        const Token start = p.peek();
        ProjectivePoint q = p.point();
        if (q.size() != ring->size())
          Parser::fail_at("point has " + std::to_string(q.size()) + " coordinates, ring has " +
                              std::to_string(ring->size()) + " variables",
                          start);
        points.push_back(std::move(q));
        if (!p.accept(Tok::Comma)) break;
      }
    } else if (name == "partitions") {
      for (;;) {
        partitions.push_back(p.partition());
        if (!p.accept(Tok::Comma)) break;
      }
    } else if (name == "parametrization") {
      p.expect(Tok::LParen, "to open the parameter list");
      const Token first = p.peek();
      auto names = p.ident_list(Tok::RParen, "in parameter list");
      p.expect(Tok::RParen, "to close the parameter list");
      RingPtr params;
      try {
        params = make_ring(names);
      } catch (const std::exception& e) {
        Parser::fail_at(e.what(), first);
      }
      p.expect(Tok::Arrow, "after the parameter list");
      const Token open = p.expect(Tok::LParen, "to open the image list");
      std::vector<Polynomial> images;
      for (;;) {
        images.push_back(p.poly(params));
        if (!p.accept(Tok::Comma)) break;
      }
      p.expect(Tok::RParen, "to close the image list");
      if (images.size() != ring->size())
        Parser::fail_at("parametrization has " + std::to_string(images.size()) + " images, ring has " +
                            std::to_string(ring->size()) + " variables",
                        open);
      int degree = kNegInfinity;
      for (const auto& img : images) {
        if (img.is_zero()) continue;
        if (!img.is_homogeneous() || (degree != kNegInfinity && img.total_degree() != degree))
          Parser::fail_at("parametrization images must be forms of one common degree", open);
        degree = img.total_degree();
      }
      if (degree == kNegInfinity) Parser::fail_at("parametrization images are all zero", open);
      param = Parametrization{params, std::move(images)};
    } else {
      Parser::fail_at("unknown section '" + name + "'", kw);
    }
    p.expect(Tok::Semi, ("to end section '" + name + "'").c_str());
  }

  if (!ring) p.fail("missing 'ring' section");
  if (!gens) p.fail("missing 'ideal' section");
  if (!center) p.fail("missing 'center' section");

  Ideal ideal(ring, std::move(*gens));
  bool all_vanish = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                [&](const Polynomial& g) { return vanishes_at(g, *center); });
  if (all_vanish)
    throw CenterOnScheme("center " + center->str() + " lies on the scheme (every generator vanishes there)");
  return ProblemFile{ring, std::move(ideal), *center, std::move(points), std::move(partitions), std::move(param)};
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize(const Polynomial& f) { return f.str(); }

std::string serialize(const Ideal& ideal) { return ideal.str(); }

} // namespace ramify
