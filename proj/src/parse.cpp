#include "wbu/parse.hpp"

#include <algorithm>
#include <cctype>

namespace wbu {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    for (std::size_t k = 0; k < w.size(); ++k) advance();
    return true;
  }
  std::string identifier() {
    skip_ws();
    if (i_ >= s_.size() || !ident_start(static_cast<unsigned char>(s_[i_]))) fail("expected identifier");
    std::string out;
    while (i_ < s_.size() && ident_char(static_cast<unsigned char>(s_[i_]))) {
      out += s_[i_];
      advance();
    }
    return out;
  }
  mpz_class integer() {
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    std::string out;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      out += s_[i_];
      advance();
    }
    return mpz_class(out);
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, line_, col_);
  }
  int line() {
    skip_ws();
    return line_;
  }
  int column() {
    skip_ws();
    return col_;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }
  void advance() {
    const unsigned char c = static_cast<unsigned char>(s_[i_]);
    ++i_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++col_;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, const FieldTower& k, const std::vector<std::string>& vars)
      : cur_(cur), k_(k), vars_(vars) {}

  Poly expr() {
    Poly acc = signed_term();
    for (;;) {
      if (cur_.accept('+'))
        acc += term();
      else if (cur_.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

 private:
  Poly signed_term() {
    if (cur_.accept('-')) return -term();
    cur_.accept('+');
    return term();
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else if (cur_.peek() == '/') {
        const int line = cur_.line(), col = cur_.column();
        cur_.accept('/');
        Poly d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division only by a nonzero constant", line, col);
        acc = acc * d.constant_term().inv();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (cur_.accept('-')) return -factor();
    Poly b = base();
    if (cur_.accept('^')) {
      const int line = cur_.line(), col = cur_.column();
      mpz_class e = cur_.integer();
      if (!e.fits_ulong_p() || e > 100000) throw ParseError("exponent too large", line, col);
      b = b.pow(e.get_ui());
    }
    return b;
  }

  Poly base() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.accept('(');
      Poly inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = cur_.integer();
      return Poly::constant(k_, vars_, k_.from_rational(mpq_class(v)));
    }
    if (c == '\0') cur_.fail("unexpected end of input");
    if (!ident_start(static_cast<unsigned char>(c))) cur_.fail(std::string("unexpected '") + c + "'");
    const int line = cur_.line(), col = cur_.column();
    std::string name = cur_.identifier();
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end())
      return Poly::variable(k_, vars_, static_cast<std::size_t>(it - vars_.begin()));
    if (auto g = k_.named_generator(name)) return Poly::constant(k_, vars_, *g);
    throw ParseError("unknown identifier '" + name + "'", line, col);
  }

  Cursor& cur_;
  const FieldTower& k_;
  const std::vector<std::string>& vars_;
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldTower& k, const std::vector<std::string>& vars) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty expression");
  PolyParser p(cur, k, vars);
  Poly out = p.expr();
  if (!cur.done()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
  return out;
}

std::vector<std::string> free_identifiers(const std::string& text, const FieldTower& k) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    if (!ident_start(c)) {
      ++i;
      continue;
    }
    std::string name;
    while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) name += text[i++];
    if (k.named_generator(name)) continue;
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

FieldTower parse_field(const std::string& text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty field descriptor");
  FieldTower k;
  {
    if (cur.accept_word("QQ")) {
      k = FieldTower::rationals();
    } else if (cur.accept_word("GF")) {
      cur.expect('(');
      const int line = cur.line(), col = cur.column();
      mpz_class p = cur.integer();
      cur.expect(')');
      if (!p.fits_ulong_p()) throw ParseError("characteristic too large", line, col);
      try {
        k = FieldTower::prime_field(p.get_ui());
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line, col);
      }
    } else {
      cur.fail("expected QQ or GF(p)");
    }
    while (!cur.done()) {
      const int line = cur.line(), col = cur.column();
      if (cur.accept('(')) {
        std::string name = cur.identifier();
        cur.expect(')');
        try {
          k = k.adjoin_transcendental(name);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), line, col);
        }
      } else if (cur.accept('[')) {
        std::string name = cur.identifier();
        cur.expect(']');
        cur.expect('/');
        cur.expect('(');
        const std::vector<std::string> var{name};
        PolyParser pp(cur, k, var);
        Poly m = pp.expr();
        cur.expect(')');
        try {
          k = k.extend(name, m.to_upoly(0));
        } catch (const std::exception& e) {
          throw ParseError(e.what(), line, col);
        }
      } else {
        cur.fail(std::string("unexpected '") + cur.peek() + "'");
      }
    }
  }
  return k;
}

}  // namespace wbu
