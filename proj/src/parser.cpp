#include <cctype>
#include <string>
#include <vector>

#include "spanalex/tangle.hpp"

namespace spanalex {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  TangleExpr parse() {
    TangleExpr e = expr();
    skip_ws();
    if (pos_ < text_.size()) syntax_error("end of input");
    return e;
  }

 private:
  [[noreturn]] void syntax_error(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    fail(ErrorCode::SyntaxError,
         "position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) syntax_error(std::string("'") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      syntax_error("integer");
    }
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      syntax_error("integer in range");
    }
  }

  std::vector<TangleExpr> arguments() {
    expect('(');
    std::vector<TangleExpr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    return args;
  }

  // Typecheck failures get the position of the offending construct.
  template <class Fn>
  TangleExpr checked(std::size_t at, Fn&& build) {
    try {
      return build();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryMismatch) throw;
      fail(ErrorCode::BoundaryMismatch, "position " + std::to_string(at) + ": " + e.what());
    }
  }

  TangleExpr expr() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string w = word();
    if (w == "X") {
      CrossingSign sign;
      if (accept('+')) sign = CrossingSign::Plus;
      else if (accept('-')) sign = CrossingSign::Minus;
      else syntax_error("'+' or '-'");
      expect('@');
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '3') syntax_error("rotation class 0-3");
      const int k = text_[pos_++] - '0';
      return TangleExpr::crossing(sign, k);
    }
    if (w == "cup" || w == "cupL") return TangleExpr::cupcap(CupCapKind::CupL);
    if (w == "cupR") return TangleExpr::cupcap(CupCapKind::CupR);
    if (w == "cap" || w == "capR") return TangleExpr::cupcap(CupCapKind::CapR);
    if (w == "capL") return TangleExpr::cupcap(CupCapKind::CapL);
    if (w == "id") {
      expect('(');
      const std::string d = word();
      Direction dir = Direction::Up;
      if (d == "down") dir = Direction::Down;
      else if (d != "up") syntax_error("'up' or 'down'");
      expect(')');
      return TangleExpr::id(dir);
    }
    if (w == "tensor") {
      auto args = arguments();
      return TangleExpr::tensor(std::move(args));
    }
    if (w == "compose") {
      auto args = arguments();
      return checked(at, [&] { return TangleExpr::compose(std::move(args)); });
    }
    if (w == "rot") {
      expect('(');
      TangleExpr child = expr();
      expect(')');
      return checked(at, [&] { return TangleExpr::rotate(child); });
    }
    if (w == "pow") {
      expect('(');
      TangleExpr child = expr();
      expect(',');
      const long n = integer();
      expect(')');
      return checked(at, [&] { return TangleExpr::pow(child, n); });
    }
    pos_ = at;
    syntax_error("one of X+@k, X-@k, cup, cap, cupL, cupR, capL, capR, id, tensor, compose, rot, pow");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

TangleExpr parse_tangle(const std::string& text) { return Parser(text).parse(); }

}  // namespace spanalex
