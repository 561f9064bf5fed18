#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lawvere::sexpr {

/// A parsed s-expression node: either an atom or a parenthesized list.
/// `offset` is the 0-based byte offset of the node in the source text.
struct Node {
    enum class Kind { Atom, List };

    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<Node> items;
    std::size_t offset = 0;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_list() const { return kind == Kind::List; }
};

/// Reads exactly one s-expression from `text`; trailing non-whitespace is an
/// error. Throws lawvere::InputError with the offending offset.
Node parse(std::string_view text);

/// "at offset N" suffix used by all parse diagnostics.
std::string where(const Node& node);

} // namespace lawvere::sexpr
