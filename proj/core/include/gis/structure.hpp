#ifndef GIS_STRUCTURE_HPP_
#define GIS_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/digraph.hpp"
#include "gis/element.hpp"

namespace gis {

/// An enumerated slice of the graph inverse semigroup: zero plus every
/// co-terminal path pair whose paths fit the bound, in canonical order.
/// An empty bound means the whole semigroup, which is finite exactly
/// when the graph is acyclic; such tables are closed under multiply.
/// Every table is closed under inverse. The table borrows the graph, so
/// the graph must outlive it.
class SemigroupTable {
 public:
  Digraph const& graph() const noexcept { return *graph_; }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  std::optional<std::size_t> bound() const noexcept { return bound_; }
  bool exact() const noexcept { return !bound_.has_value(); }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Position of a in the canonical element order, if present.
  std::optional<std::size_t> index_of(Element const& a) const;

 private:
  friend SemigroupTable enumerate(Digraph const& g,
                                  std::optional<std::size_t> bound);

  SemigroupTable(Digraph const& g, std::vector<Element> elements,
                 std::optional<std::size_t> bound)
      : graph_(&g), elements_(std::move(elements)), bound_(bound) {}

  Digraph const* graph_;
  std::vector<Element> elements_;
  std::optional<std::size_t> bound_;
};

/// All elements (p,q) with r(p) = r(q) over the admitted path set, plus
/// zero. An empty bound requires an acyclic graph; on a cyclic one this
/// throws Error, since the semigroup is infinite.
SemigroupTable enumerate(Digraph const& g, std::optional<std::size_t> bound);

/// Hasse diagram of the idempotent semilattice: nodes in canonical
/// order, covers as (lower, upper) index pairs with nothing strictly
/// between.
struct HasseDiagram {
  std::vector<Element> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Transitive reduction of the natural partial order on the idempotents
/// of t.
HasseDiagram idempotent_lattice(SemigroupTable const& t);

/// Idempotents with no other idempotent strictly above them. These are
/// exactly the vertex elements.
std::vector<Element> maximal_idempotents(SemigroupTable const& t);

/// Nonzero idempotents with no nonzero idempotent strictly below.
/// On a bounded table the result can be a truncation artifact (a chain
/// cut off at the bound), so it is flagged rather than trusted.
struct MinimalIdempotents {
  std::vector<Element> elements;
  bool truncated;
};

MinimalIdempotents minimal_nonzero_idempotents(SemigroupTable const& t);

/// Whether every nonzero idempotent of the semigroup is minimal among
/// nonzero idempotents. Holds iff the graph has no edge.
bool is_primitive(Digraph const& g);

/// The same property read off an enumerated table: no strict
/// comparability between distinct nonzero idempotents. Agrees with
/// is_primitive whenever the table's bound admits at least length-1
/// paths.
bool is_primitive_by_definition(SemigroupTable const& t);

/// The local submonoid e·S·e for a nonzero idempotent e = (p,p): zero
/// plus all (p·u, p·w) with u, w co-terminal paths from range(p), the
/// full paths fitting the bound. Its identity is e itself. An empty
/// bound requires an acyclic graph. Throws Error when e is zero or not
/// idempotent.
std::vector<Element> local_submonoid(Digraph const& g, Element const& e,
                                     std::optional<std::size_t> bound);

/// Whether v·S·v = {0, v}; holds iff v is a sink. Throws Error on an
/// unknown vertex.
bool is_local_submonoid_trivial(Digraph const& g, vertex_id v);

enum class GreenRelation { L, R, H, D, J };

/// One of "L", "R", "H", "D", "J".
std::optional<GreenRelation> parse_green_relation(std::string_view text);

char to_char(GreenRelation rel);

/// Green's relations in path terms. Zero is related only to zero under
/// every relation. For nonzero a = (p,q) and b = (x,y):
///   L: q = y;  R: p = x;  H: a = b;  D: r(p) = r(x);
///   J: r(p) and r(x) lie in the same strongly connected component.
bool green_related(Digraph const& g, Element const& a, Element const& b,
                   GreenRelation rel);

/// Partition of t's elements under green_related, blocks ordered by
/// their first element in canonical order; {zero} is always a block.
std::vector<std::vector<Element>> green_classes(SemigroupTable const& t,
                                                GreenRelation rel);

}  // namespace gis

#endif  // GIS_STRUCTURE_HPP_
