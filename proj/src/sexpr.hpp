#ifndef HYBRID_SRC_SEXPR_HPP
#define HYBRID_SRC_SEXPR_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hybrid::sexpr {

// Minimal s-expression tree shared by the DbTerm and OpenTerm readers.
struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t position = 0;
};

// Reads exactly one s-expression; trailing non-whitespace is an error.
Node read(std::string_view text);

// Helpers for converters. All throw ParseError at the node's position.
const std::string& head(const Node& list);
void expect_arity(const Node& list, std::size_t args);
std::uint64_t natural(const Node& n);
const std::string& symbol(const Node& n);

}  // namespace hybrid::sexpr

#endif  // HYBRID_SRC_SEXPR_HPP
