#include <cctype>

#include "steinberg/errors.hpp"
#include "steinberg/polyalg/poly.hpp"

namespace steinberg::polyalg {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }

  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected number at offset " + std::to_string(i) + " in: " + s);
    return s.substr(start, i - start);
  }

  std::string ident() {
    skip_ws();
    size_t start = i;
    if (i < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    }
    if (start == i) throw ParseError("expected identifier at offset " + std::to_string(i) + " in: " + s);
    return s.substr(start, i - start);
  }
};

// expr   := [+|-] product ((+|-) product)*
// product:= power (* power)*
// power  := atom [^ number]
// atom   := number [/ number] | variable | ( expr ) | - power
struct Parser {
  Lexer lx;
  const RingPtr& ring;
  const std::string& text;

  Poly parse_expr() {
    bool neg = lx.accept('-');
    if (!neg) lx.accept('+');
    Poly acc = parse_product();
    if (neg) acc = -acc;
    for (;;) {
      const char c = lx.peek();
      if (c == '+') {
        lx.take();
        acc = acc + parse_product();
      } else if (c == '-') {
        lx.take();
        acc = acc - parse_product();
      } else {
        return acc;
      }
    }
  }

  Poly parse_product() {
    Poly acc = parse_power();
    while (lx.accept('*')) acc = acc * parse_power();
    return acc;
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (lx.accept('^')) {
      const unsigned long k = std::stoul(lx.number());
      Poly r = Poly::constant(ring, Rat(1));
      for (unsigned long j = 0; j < k; ++j) r = r * base;
      return r;
    }
    return base;
  }

  Poly parse_atom() {
    const char c = lx.peek();
    if (c == '(') {
      lx.take();
      Poly inner = parse_expr();
      if (!lx.accept(')'))
        throw ParseError("missing ')' at offset " + std::to_string(lx.i) + " in: " + text);
      return inner;
    }
    if (c == '-') {
      lx.take();
      return -parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat num = rat_parse(lx.number());
      if (lx.accept('/')) num /= rat_parse(lx.number());
      return Poly::constant(ring, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = lx.ident();
      const auto idx = ring->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "' in: " + text);
      return Poly::variable(ring, *idx);
    }
    throw ParseError("expected term at offset " + std::to_string(lx.i) + " in: " + text);
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser parser{Lexer{text}, ring, text};
  Poly out = parser.parse_expr();
  if (!parser.lx.done())
    throw ParseError(std::string("unexpected '") + parser.lx.peek() + "' in: " + text);
  return out;
}

}  // namespace steinberg::polyalg
