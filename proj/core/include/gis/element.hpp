#ifndef GIS_ELEMENT_HPP_
#define GIS_ELEMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/digraph.hpp"
#include "gis/errors.hpp"

namespace gis {

/// An element of the graph inverse semigroup of a digraph: zero, or a
/// normal-form pair of co-terminal paths (left, right) read as
/// left·right*. Elements compare componentwise; zero equals only zero.
class Element {
 public:
  /// Zero, the absorbing element.
  Element() = default;

  static Element zero() { return Element(); }

  bool is_zero() const noexcept { return !parts_.has_value(); }

  /// The p of p·q*. Pre: !is_zero().
  Path const& left() const;

  /// The q of p·q*. Pre: !is_zero().
  Path const& right() const;

  friend bool operator==(Element const&, Element const&) = default;

  friend Element make_element(Path left, Path right);

 private:
  Element(Path left, Path right)
      : parts_(std::in_place, std::move(left), std::move(right)) {}

  std::optional<std::pair<Path, Path>> parts_;
};

/// The nonzero element left·right*; throws Error("not co-terminal")
/// unless range(left) = range(right).
Element make_element(Path left, Path right);

/// Semigroup product. Zero absorbs; for (p1,q1)·(p2,q2) the result is
/// (p1·t, q2) when p2 = q1·t, (p1, q2·t) when q1 = p2·t, zero otherwise.
/// The two branches overlap exactly when q1 = p2 and then agree.
Element multiply(Element const& a, Element const& b);

/// The unique inverse: zero -> zero, (p,q) -> (q,p).
Element inverse(Element const& a);

/// True iff a = zero or a = (p,p); equivalently multiply(a,a) == a.
bool is_idempotent(Element const& a);

/// Natural partial order on idempotents: zero is the minimum, and
/// (p,p) <= (q,q) iff q is an initial component of p. Throws Error if
/// either argument is not idempotent.
bool nat_leq(Element const& a, Element const& b);

/// Canonical element order: zero first, then lexicographically by
/// (right path, left path) under path_less.
bool element_less(Digraph const& g, Element const& a, Element const& b);

/// "0" for zero, otherwise "<left>|<right>" in path syntax, e.g.
/// "e1.e2|e2" or "@v|@v".
std::string to_string(Digraph const& g, Element const& a);

/// Inverse of to_string; throws ParseError on malformed literals,
/// unknown names, or non-co-terminal paths.
Element parse_element(Digraph const& g, std::string_view text);

/// One generator of the semigroup: a vertex, an edge, or a ghost edge.
struct Generator {
  enum class Kind : std::uint8_t { vertex, edge, ghost };

  Kind kind;
  std::uint32_t index;  // vertex_id or edge_id, per kind

  friend bool operator==(Generator const&, Generator const&) = default;
};

/// A free word over the generators; input to reduce_word.
using Word = std::vector<Generator>;

/// Whitespace-separated tokens; ghost edges are written "e*". Throws
/// ParseError on an unknown token.
Word parse_word(Digraph const& g, std::string_view text);

std::string to_string(Digraph const& g, Word const& w);

/// The image of one generator: v -> (v,v), e -> (e, r(e)),
/// e* -> (r(e), e).
Element generator_element(Digraph const& g, Generator const& t);

/// Normal form of a nonempty word: map each token through
/// generator_element and left-fold with multiply. Throws Error on an
/// empty word.
Element reduce_word(Digraph const& g, Word const& w);

}  // namespace gis

#endif  // GIS_ELEMENT_HPP_
