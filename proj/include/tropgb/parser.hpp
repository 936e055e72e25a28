#ifndef TROPGB_PARSER_HPP
#define TROPGB_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "tropgb/orders.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Parses an operator expression over the variables x1..xn, d1..dn, h.
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := rat ('*' factor)* | factor ('*' factor)*
///   factor := var ['^' uint]
///   rat    := int ['/' uint]
///
/// Whitespace-insensitive.  Factors multiply left to right with the
/// noncommutative product, so "d1*x1" normalizes to x1*d1 + h^2.
Operator parse_operator(std::string_view src, int n);

/// Prints with the leading term first; printing and re-parsing gives back
/// the identical term map.
std::string to_string(const Operator& f, const OrderConfig& cfg);
std::string to_string(const Term& t);
std::string to_string(const ModMono& m);

}  // namespace tropgb

#endif
