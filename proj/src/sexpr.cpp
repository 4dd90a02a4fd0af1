#include "sexpr.hpp"

#include <cctype>
#include <charconv>

#include "hybrid/errors.hpp"

namespace hybrid::sexpr {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Node top() {
    Node n = node();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "unexpected trailing input");
    }
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Node node() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    Node n;
    n.position = pos_;
    if (text_[pos_] == '(') {
      n.is_list = true;
      ++pos_;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        n.items.push_back(node());
      }
      if (n.items.empty()) throw ParseError(n.position, "empty list");
      return n;
    }
    if (text_[pos_] == ')') throw ParseError(pos_, "unexpected ')'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    n.atom = std::string(text_.substr(start, pos_ - start));
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Node read(std::string_view text) { return Reader(text).top(); }

const std::string& head(const Node& list) {
  if (list.items.front().is_list) {
    throw ParseError(list.items.front().position, "expected a constructor name");
  }
  return list.items.front().atom;
}

void expect_arity(const Node& list, std::size_t args) {
  if (list.items.size() != args + 1) {
    throw ParseError(list.position, head(list) + " expects " +
                                        std::to_string(args) + " argument(s)");
  }
}

std::uint64_t natural(const Node& n) {
  if (n.is_list || n.atom.empty()) throw ParseError(n.position, "expected a natural number");
  std::uint64_t v = 0;
  const char* first = n.atom.data();
  const char* last = first + n.atom.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(n.position, "expected a natural number, got '" + n.atom + "'");
  }
  return v;
}

const std::string& symbol(const Node& n) {
  if (n.is_list) throw ParseError(n.position, "expected a name");
  return n.atom;
}

}  // namespace hybrid::sexpr
