#ifndef GIS_DIGRAPH_HPP_
#define GIS_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gis/errors.hpp"

namespace gis {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;

/// A finite directed multigraph. Vertices and edges are declared with
/// textual names, unique across both namespaces, and addressed by dense
/// indices in declaration order. Parallel edges and loops are allowed.
///
/// Instances are immutable: strongly connected components and acyclicity
/// are computed once at construction, so every query is safe for
/// concurrent reads.
class Digraph {
 public:
  struct EdgeSpec {
    std::string name;
    std::string source;
    std::string range;
  };

  /// Throws Error if the vertex set is empty, a name is repeated in
  /// either namespace, or an edge endpoint is undeclared.
  Digraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edge_sources_.size(); }

  std::string const& vertex_name(vertex_id v) const;
  std::string const& edge_name(edge_id e) const;
  vertex_id source(edge_id e) const;
  vertex_id range(edge_id e) const;

  std::optional<vertex_id> find_vertex(std::string_view name) const;
  std::optional<edge_id> find_edge(std::string_view name) const;

  /// Edges leaving v, in declaration order.
  std::vector<edge_id> const& out_edges(vertex_id v) const;

  /// True iff no edge starts at v. Throws Error on an unknown vertex.
  bool is_sink(vertex_id v) const;

  /// True iff the edge set is empty.
  bool is_totally_disconnected() const noexcept {
    return edge_sources_.empty();
  }

  /// True iff the graph has no directed cycle (loops included).
  bool is_acyclic() const noexcept { return acyclic_; }

  /// Strongly connected components. Blocks are ordered by their smallest
  /// member and list vertices in declaration order; u and v share a
  /// block iff directed paths u -> v and v -> u both exist.
  std::vector<std::vector<vertex_id>> const& scc() const noexcept {
    return sccs_;
  }

  /// Index of the scc block containing v.
  std::uint32_t scc_index(vertex_id v) const;

 private:
  void compute_sccs();

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<vertex_id> edge_sources_;
  std::vector<vertex_id> edge_ranges_;
  std::unordered_map<std::string, vertex_id> vertex_index_;
  std::unordered_map<std::string, edge_id> edge_index_;
  std::vector<std::vector<edge_id>> out_edges_;
  std::vector<std::vector<vertex_id>> sccs_;
  std::vector<std::uint32_t> scc_index_;
  bool acyclic_ = false;
};

/// Parse the one-declaration-per-line graph format:
///
///   # comment
///   vertex <id>
///   edge <id> <source-id> <range-id>
///
/// Identifiers match [A-Za-z0-9_]+; '#' starts a comment and blank lines
/// are ignored. Declaration order is irrelevant to the semantics (edges
/// may precede the vertices they mention). Throws ParseError naming the
/// offending line.
Digraph parse_graph(std::string_view text);

/// A directed path: the trivial path at a vertex, or a nonempty
/// composable edge sequence. Source and range are fixed at construction,
/// so the path algebra below needs no graph argument. Two paths are
/// equal iff they have the same edge sequence (and, when trivial, the
/// same base vertex).
class Path {
 public:
  /// The trivial path at v.
  static Path at(vertex_id v);

  /// The path along a composable edge sequence; throws Error if the
  /// sequence is empty or does not compose in g.
  static Path of(Digraph const& g, std::vector<edge_id> edges);

  vertex_id source() const noexcept { return src_; }
  vertex_id range() const noexcept { return rng_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_trivial() const noexcept { return edges_.empty(); }
  std::vector<edge_id> const& edges() const noexcept { return edges_; }

  friend bool operator==(Path const&, Path const&) = default;

  friend std::optional<Path> concat(Path const& p, Path const& q);
  friend std::optional<Path> strip_prefix(Path const& p, Path const& q);

 private:
  Path(vertex_id src, vertex_id rng, std::vector<edge_id> edges)
      : src_(src), rng_(rng), edges_(std::move(edges)) {}

  vertex_id src_;
  vertex_id rng_;
  std::vector<edge_id> edges_;
};

/// p followed by q, defined iff range(p) = source(q); trivial paths are
/// identities on the matching side.
std::optional<Path> concat(Path const& p, Path const& q);

/// The t with p = q·t when q is an initial component of p (equal
/// sources, q's edges a prefix of p's), else nullopt. In particular
/// strip_prefix(p, p) is the trivial path at range(p).
std::optional<Path> strip_prefix(Path const& p, Path const& q);

/// Canonical path order: shorter first; trivial paths by vertex
/// declaration order; equal-length paths lexicographically by edge name.
bool path_less(Digraph const& g, Path const& a, Path const& b);

/// "@v" for the trivial path at v, otherwise '.'-joined edge names.
std::string to_string(Digraph const& g, Path const& p);

/// Inverse of to_string; throws ParseError on unknown names, an empty
/// literal, or a non-composable sequence.
Path parse_path(Digraph const& g, std::string_view text);

/// All directed paths of edge-length <= max_len, trivial paths included,
/// in canonical order. An empty max_len asks for every path and requires
/// an acyclic graph; on a cyclic one this throws Error("infinite path
/// set").
std::vector<Path> enumerate_paths(Digraph const& g,
                                  std::optional<std::size_t> max_len);

}  // namespace gis

#endif  // GIS_DIGRAPH_HPP_
