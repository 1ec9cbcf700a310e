#include <cctype>

#include "ainfty/errors.hpp"
#include "ainfty/opexpr.hpp"

namespace ainfty {

namespace {

constexpr std::string_view kCompose = "∘";
constexpr std::string_view kTensor = "⊗";

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  OpExpr parse() {
    OpExpr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool accept_compose() { return accept(kCompose) || accept("."); }

  bool accept_tensor() {
    if (accept(kTensor) || accept("*")) return true;
    // a lone 'x' is the ASCII tensor sign
    skip();
    if (i_ < s_.size() && s_[i_] == 'x') {
      const std::size_t j = i_ + 1;
      if (j >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '{' || s_[j] == '_')) {
        ++i_;
        return true;
      }
    }
    return false;
  }

  OpExpr expr() {
    std::vector<OpExpr> factors{tensor()};
    while (accept_compose()) factors.push_back(tensor());
    return OpExpr::compose(factors);
  }

  OpExpr tensor() {
    std::vector<OpExpr> items{factor()};
    while (accept_tensor()) items.push_back(factor());
    return OpExpr::tensor(items);
  }

  int number() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    if (i_ - start > 6) fail("number too large");
    return std::stoi(std::string(s_.substr(start, i_ - start)));
  }

  std::vector<int> braced_list() {
    expect("{");
    std::vector<int> out{number()};
    while (accept(",")) out.push_back(number());
    expect("}");
    return out;
  }

  // letters, '_', '*', and any non-ASCII code point other than the operators
  std::string identifier() {
    const std::size_t start = i_;
    while (i_ < s_.size()) {
      const auto c = static_cast<unsigned char>(s_[i_]);
      if (std::isalpha(c) || c == '_' || (c == '*' && i_ > start)) {
        ++i_;
      } else if (c >= 0x80) {
        if (s_.substr(i_, kCompose.size()) == kCompose || s_.substr(i_, kTensor.size()) == kTensor) break;
        ++i_;
        while (i_ < s_.size() && (static_cast<unsigned char>(s_[i_]) & 0xC0) == 0x80) ++i_;
      } else {
        break;
      }
    }
    return std::string(s_.substr(start, i_ - start));
  }

  bool at_digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

  OpExpr factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (accept("(")) {
      OpExpr e = expr();
      expect(")");
      return e;
    }
    if (at_digit()) {
      if (number() != 1) fail("only the identity '1' may appear as a number");
      return OpExpr::identity();
    }
    const std::size_t start = i_;
    const std::string name = identifier();
    if (name.empty()) fail("unexpected character");
    if ((name == "m" || name == "Δ" || name == "D") && at_digit()) {
      const int n = number();
      if (n < 2) {
        i_ = start;
        fail("arity must be at least 2");
      }
      return name == "m" ? OpExpr::m(n) : OpExpr::delta(n);
    }
    if (name == "d") return OpExpr::d();
    skip();
    if (i_ >= s_.size() || s_[i_] != '{') {
      i_ = start;
      fail("unknown operation '" + name + "'");
    }
    const std::vector<int> args = braced_list();
    if (name == "σ" || name == "s") {
      if (args.size() != 2 || args[0] < 1 || args[1] < 1) fail("σ takes two positive arguments");
      return OpExpr::sigma(args[0], args[1]);
    }
    if (name == "π" || name == "p") {
      std::vector<int> source;
      for (int a : args) source.push_back(a - 1);
      try {
        return OpExpr::permutation(source);
      } catch (const InvariantViolation&) {
        fail("π needs a permutation of 1..n");
      }
    }
    if (args.size() != 2 || args[0] < 1 || args[1] < 1) fail("symbols take {outputs,inputs}");
    return OpExpr::symbol(name, args[0], args[1]);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

OpExpr parse_opexpr(std::string_view text) { return Parser(text).parse(); }

}  // namespace ainfty
