#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "cli.hpp"

namespace hybrid::cli {

namespace {

// Reads HOAS text straight into de Bruijn form, resolving LAM names by
// scope, then goes through from_db.
class HoasReader {
 public:
  explicit HoasReader(std::string_view text) : text_(text) {}

  DbTerm top() {
    DbTerm t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool word_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && word_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string word() {
    std::string_view w = peek_word();
    if (w.empty()) fail("expected a name");
    pos_ += w.size();
    return std::string(w);
  }

  // Constant names may use any non-space, non-parenthesis character.
  std::string con_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected a constant name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n);
    if (start == pos_ || ec != std::errc{}) {
      pos_ = start;
      fail("expected a natural number");
    }
    return n;
  }

  bool at_operator() {
    skip_ws();
    return text_.substr(pos_, 2) == "$$";
  }

  DbTerm expr() {
    if (peek_word() == "LAM") return lam();
    DbTerm t = operand();
    while (at_operator()) {
      pos_ += 2;
      DbTerm rhs = peek_word() == "LAM" ? lam() : operand();
      t = DbTerm::app(std::move(t), std::move(rhs));
    }
    return t;
  }

  DbTerm lam() {
    pos_ += 3;
    std::string name = word();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '.') fail("expected '.' after LAM binder");
    ++pos_;
    scope_.push_back(name);
    DbTerm body = expr();
    scope_.pop_back();
    return DbTerm::abs(std::move(body));
  }

  DbTerm operand() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      DbTerm t = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    std::string w = word();
    if (w == "CON") {
      std::size_t at = pos_;
      std::string name = con_name();
      try {
        return DbTerm::con(ConId(name));
      } catch (const PreconditionViolated& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    if (w == "VAR") return DbTerm::var(number());
    if (w == "ERR") return DbTerm::err();
    for (std::size_t k = scope_.size(); k-- > 0;) {
      if (scope_[k] == w) return DbTerm::bnd(scope_.size() - 1 - k);
    }
    pos_ = start;
    fail("unbound name '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Expr parse_hoas(std::string_view text) { return from_db(HoasReader(text).top()); }

Expr parse_term(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '(') {
    try {
      return from_db(parse_sexpr(text));
    } catch (const ParseError&) {
      // Parenthesized HOAS, e.g. "(VAR 1 $$ VAR 2)".
    }
  }
  return parse_hoas(text);
}

}  // namespace hybrid::cli
