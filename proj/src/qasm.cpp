#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "atomc/circuit.hpp"

namespace atomc {

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         what),
      line(line),
      col(col) {}

namespace {

struct Token {
  enum Type { Ident, Number, String, Symbol, End } type = End;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += take();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.type = Token::Number;
      const char* start = text_.c_str() + pos_;
      char* end = nullptr;
      t.value = std::strtod(start, &end);
      if (end == start) throw ParseError(line_, col_, "bad number");
      for (const char* p = start; p != end; ++p) t.text += take();
      return t;
    }
    if (c == '"') {
      t.type = Token::String;
      take();
      while (pos_ < text_.size() && text_[pos_] != '"') t.text += take();
      if (pos_ >= text_.size()) throw ParseError(t.line, t.col, "unterminated string");
      take();
      return t;
    }
    t.type = Token::Symbol;
    t.text = std::string(1, take());
    return t;
  }

private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  Circuit parse() {
    Circuit c;
    bool saw_qreg = false;
    if (cur_.type == Token::Ident && cur_.text == "OPENQASM") {
      advance();
      expect_number("version");
      expect_symbol(";");
    }
    while (cur_.type != Token::End) {
      if (cur_.type != Token::Ident) throw err("expected a statement");
      std::string name = cur_.text;
      if (name == "include") {
        advance();
        if (cur_.type != Token::String) throw err("expected include file name");
        advance();
        expect_symbol(";");
        continue;
      }
      if (name == "qreg") {
        if (saw_qreg) throw err("only one qreg is supported");
        advance();
        if (cur_.type != Token::Ident) throw err("expected register name");
        reg_name_ = cur_.text;
        advance();
        expect_symbol("[");
        c.n = static_cast<int>(expect_number("register size"));
        if (c.n <= 0) throw err("register size must be positive");
        expect_symbol("]");
        expect_symbol(";");
        saw_qreg = true;
        continue;
      }
      if (!saw_qreg) throw err("qreg must precede gate statements");
      c.gates.push_back(parse_gate(name, c.n));
    }
    if (!saw_qreg) throw err("missing qreg declaration");
    return c;
  }

private:
  Gate parse_gate(const std::string& name, int n) {
    Token at = cur_;
    GateKind kind;
    bool needs_angle = false;
    if (name == "h") {
      kind = GateKind::h();
    } else if (name == "x") {
      kind = GateKind::x();
    } else if (name == "rx" || name == "ry" || name == "rz" || name == "cp") {
      needs_angle = true;
    } else if (name == "cx") {
      kind = GateKind::cx();
    } else if (name == "cz") {
      kind = GateKind::cz();
    } else if (name == "swap") {
      kind = GateKind::swap();
    } else if (name == "ccz") {
      kind = GateKind::ccz();
    } else if (name == "cccz") {
      kind = GateKind::cccz();
    } else {
      throw ParseError(at.line, at.col, "unknown gate '" + name + "'");
    }
    advance();
    if (needs_angle) {
      expect_symbol("(");
      double angle = parse_angle();
      expect_symbol(")");
      if (name == "rx") kind = GateKind::r1q(Axis::X, angle);
      else if (name == "ry") kind = GateKind::r1q(Axis::Y, angle);
      else if (name == "rz") kind = GateKind::r1q(Axis::Z, angle);
      else kind = GateKind::cp(angle);
    }
    Gate g{kind, {}};
    int count = arity(kind.tag);
    for (int i = 0; i < count; ++i) {
      if (i > 0) expect_symbol(",");
      g.operands.push_back(parse_operand(n));
    }
    expect_symbol(";");
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j)
        if (g.operands[i] == g.operands[j])
          throw ParseError(at.line, at.col, "duplicate operand in '" + name + "'");
    return g;
  }

  // number | pi | number*pi, optionally negated and divided by a number.
  double parse_angle() {
    double sign = 1.0;
    if (cur_.type == Token::Symbol && cur_.text == "-") {
      sign = -1.0;
      advance();
    }
    double value;
    if (cur_.type == Token::Ident && cur_.text == "pi") {
      value = std::numbers::pi;
      advance();
    } else if (cur_.type == Token::Number) {
      value = cur_.value;
      advance();
      if (cur_.type == Token::Symbol && cur_.text == "*") {
        advance();
        if (!(cur_.type == Token::Ident && cur_.text == "pi")) throw err("expected pi after '*'");
        value *= std::numbers::pi;
        advance();
      }
    } else {
      throw err("expected angle");
    }
    if (cur_.type == Token::Symbol && cur_.text == "/") {
      advance();
      if (cur_.type != Token::Number || cur_.value == 0.0) throw err("expected nonzero divisor");
      value /= cur_.value;
      advance();
    }
    return sign * value;
  }

  int parse_operand(int n) {
    if (cur_.type != Token::Ident || cur_.text != reg_name_)
      throw err("expected operand '" + reg_name_ + "[...]'");
    advance();
    expect_symbol("[");
    Token at = cur_;
    int idx = static_cast<int>(expect_number("qubit index"));
    if (idx < 0 || idx >= n)
      throw ParseError(at.line, at.col, "operand index " + std::to_string(idx) + " out of range");
    expect_symbol("]");
    return idx;
  }

  void advance() { cur_ = lexer_.next(); }

  double expect_number(const char* what) {
    if (cur_.type != Token::Number) throw err(std::string("expected ") + what);
    double v = cur_.value;
    advance();
    return v;
  }

  void expect_symbol(const char* sym) {
    if (cur_.type != Token::Symbol || cur_.text != sym)
      throw err(std::string("expected '") + sym + "'");
    advance();
  }

  ParseError err(const std::string& what) { return ParseError(cur_.line, cur_.col, what); }

  Lexer lexer_;
  Token cur_;
  std::string reg_name_ = "q";
};

std::string fmt_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  Circuit c = Parser(text).parse();
  c.check();
  return c;
}

std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.n) +
                    "];\n";
  for (const Gate& g : c.gates) {
    const GateKind& k = g.kind;
    switch (k.tag) {
      case GateTag::R1Q:
        out += k.axis == Axis::X ? "rx" : k.axis == Axis::Y ? "ry" : "rz";
        out += "(" + fmt_angle(k.angle) + ")";
        break;
      case GateTag::CP:
        out += "cp(" + fmt_angle(k.angle) + ")";
        break;
      default:
        out += tag_name(k.tag);
        break;
    }
    out += " ";
    for (std::size_t i = 0; i < g.operands.size(); ++i) {
      if (i) out += ",";
      out += "q[" + std::to_string(g.operands[i]) + "]";
    }
    out += ";\n";
  }
  return out;
}

}  // namespace atomc
