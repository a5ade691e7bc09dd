#include "gis/digraph.hpp"

#include <algorithm>
#include <stack>
#include <unordered_set>
#include <utility>

namespace gis {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')
              || (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      return false;
    }
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'
                               || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t'
           && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::vector<std::string> vertices,
                 std::vector<EdgeSpec> edges)
    : vertex_names_(std::move(vertices)) {
  if (vertex_names_.empty()) {
    throw Error("graph has an empty vertex set");
  }
  for (vertex_id v = 0; v < vertex_names_.size(); ++v) {
    if (vertex_names_[v].empty()) {
      throw Error("empty vertex name");
    }
    if (!vertex_index_.emplace(vertex_names_[v], v).second) {
      throw Error("duplicate id '" + vertex_names_[v] + "'");
    }
  }
  out_edges_.resize(vertex_names_.size());
  edge_names_.reserve(edges.size());
  edge_sources_.reserve(edges.size());
  edge_ranges_.reserve(edges.size());
  for (auto& spec : edges) {
    if (spec.name.empty()) {
      throw Error("empty edge name");
    }
    if (vertex_index_.count(spec.name) != 0) {
      throw Error("duplicate id '" + spec.name + "'");
    }
    auto src = vertex_index_.find(spec.source);
    if (src == vertex_index_.end()) {
      throw Error("undeclared vertex '" + spec.source + "'");
    }
    auto rng = vertex_index_.find(spec.range);
    if (rng == vertex_index_.end()) {
      throw Error("undeclared vertex '" + spec.range + "'");
    }
    edge_id e = static_cast<edge_id>(edge_names_.size());
    if (!edge_index_.emplace(spec.name, e).second) {
      throw Error("duplicate id '" + spec.name + "'");
    }
    edge_names_.push_back(std::move(spec.name));
    edge_sources_.push_back(src->second);
    edge_ranges_.push_back(rng->second);
    out_edges_[src->second].push_back(e);
  }
  compute_sccs();
}

std::string const& Digraph::vertex_name(vertex_id v) const {
  if (v >= vertex_names_.size()) {
    throw Error("vertex index out of range");
  }
  return vertex_names_[v];
}

std::string const& Digraph::edge_name(edge_id e) const {
  if (e >= edge_names_.size()) {
    throw Error("edge index out of range");
  }
  return edge_names_[e];
}

vertex_id Digraph::source(edge_id e) const {
  if (e >= edge_sources_.size()) {
    throw Error("edge index out of range");
  }
  return edge_sources_[e];
}

vertex_id Digraph::range(edge_id e) const {
  if (e >= edge_ranges_.size()) {
    throw Error("edge index out of range");
  }
  return edge_ranges_[e];
}

std::optional<vertex_id> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<edge_id> Digraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<edge_id> const& Digraph::out_edges(vertex_id v) const {
  if (v >= out_edges_.size()) {
    throw Error("vertex index out of range");
  }
  return out_edges_[v];
}

bool Digraph::is_sink(vertex_id v) const { return out_edges(v).empty(); }

std::uint32_t Digraph::scc_index(vertex_id v) const {
  if (v >= scc_index_.size()) {
    throw Error("vertex index out of range");
  }
  return scc_index_[v];
}

// Iterative Tarjan; blocks come out in reverse topological order and are
// re-sorted canonically afterwards.
void Digraph::compute_sccs() {
  std::size_t const n = vertex_count();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnset);
  std::vector<std::uint32_t> lowlink(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<vertex_id> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    vertex_id v;
    std::size_t edge_pos;
  };
  std::stack<Frame> frames;

  for (vertex_id root = 0; root < n; ++root) {
    if (index[root] != kUnset) {
      continue;
    }
    frames.push({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& f = frames.top();
      auto const& out = out_edges_[f.v];
      if (f.edge_pos < out.size()) {
        vertex_id w = edge_ranges_[out[f.edge_pos++]];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        vertex_id v = f.v;
        frames.pop();
        if (!frames.empty()) {
          vertex_id parent = frames.top().v;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          std::vector<vertex_id> block;
          vertex_id w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            block.push_back(w);
          } while (w != v);
          sccs_.push_back(std::move(block));
        }
      }
    }
  }

  for (auto& block : sccs_) {
    std::sort(block.begin(), block.end());
  }
  std::sort(sccs_.begin(), sccs_.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  scc_index_.assign(n, 0);
  for (std::uint32_t b = 0; b < sccs_.size(); ++b) {
    for (vertex_id v : sccs_[b]) {
      scc_index_[v] = b;
    }
  }

  acyclic_ = true;
  for (auto const& block : sccs_) {
    if (block.size() > 1) {
      acyclic_ = false;
    }
  }
  for (edge_id e = 0; e < edge_sources_.size(); ++e) {
    if (edge_sources_[e] == edge_ranges_[e]) {
      acyclic_ = false;
    }
  }
}

Digraph parse_graph(std::string_view text) {
  struct PendingEdge {
    Digraph::EdgeSpec spec;
    std::size_t line;
  };
  std::vector<std::string> vertices;
  std::vector<PendingEdge> edges;
  std::unordered_map<std::string, std::size_t> declared;  // name -> line

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      continue;
    }

    auto declare = [&](std::string_view name) {
      if (!is_identifier(name)) {
        throw ParseError(line_no, "invalid identifier '" + std::string(name)
                                      + "'");
      }
      auto [it, inserted] = declared.emplace(std::string(name), line_no);
      if (!inserted) {
        throw ParseError(line_no, "duplicate id '" + std::string(name)
                                      + "' (first declared on line "
                                      + std::to_string(it->second) + ")");
      }
    };

    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected 'vertex <id>'");
      }
      declare(tokens[1]);
      vertices.emplace_back(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'edge <id> <source-id> <range-id>'");
      }
      declare(tokens[1]);
      for (int k = 2; k < 4; ++k) {
        if (!is_identifier(tokens[k])) {
          throw ParseError(line_no, "invalid identifier '"
                                        + std::string(tokens[k]) + "'");
        }
      }
      edges.push_back({{std::string(tokens[1]), std::string(tokens[2]),
                        std::string(tokens[3])},
                       line_no});
    } else {
      throw ParseError(line_no, "expected 'vertex' or 'edge', got '"
                                    + std::string(tokens[0]) + "'");
    }
  }

  if (vertices.empty()) {
    throw ParseError("graph has an empty vertex set");
  }
  std::unordered_set<std::string> vertex_names(vertices.begin(),
                                               vertices.end());
  std::vector<Digraph::EdgeSpec> specs;
  specs.reserve(edges.size());
  for (auto& pe : edges) {
    for (auto const* end : {&pe.spec.source, &pe.spec.range}) {
      if (vertex_names.count(*end) == 0) {
        throw ParseError(pe.line, "undeclared vertex '" + *end + "'");
      }
    }
    specs.push_back(std::move(pe.spec));
  }
  return Digraph(std::move(vertices), std::move(specs));
}

Path Path::at(vertex_id v) { return Path(v, v, {}); }

Path Path::of(Digraph const& g, std::vector<edge_id> edges) {
  if (edges.empty()) {
    throw Error("a path needs at least one edge; use Path::at for trivial "
                "paths");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1])) {
      throw Error("edge sequence does not compose: range of '"
                  + g.edge_name(edges[i]) + "' is not the source of '"
                  + g.edge_name(edges[i + 1]) + "'");
    }
  }
  vertex_id src = g.source(edges.front());
  vertex_id rng = g.range(edges.back());
  return Path(src, rng, std::move(edges));
}

std::optional<Path> concat(Path const& p, Path const& q) {
  if (p.range() != q.source()) {
    return std::nullopt;
  }
  std::vector<edge_id> edges = p.edges();
  edges.insert(edges.end(), q.edges().begin(), q.edges().end());
  if (edges.empty()) {
    return Path::at(p.source());
  }
  return Path(p.source(), q.range(), std::move(edges));
}

std::optional<Path> strip_prefix(Path const& p, Path const& q) {
  if (p.source() != q.source() || q.length() > p.length()) {
    return std::nullopt;
  }
  if (!std::equal(q.edges().begin(), q.edges().end(), p.edges().begin())) {
    return std::nullopt;
  }
  std::vector<edge_id> rest(p.edges().begin() + q.length(), p.edges().end());
  if (rest.empty()) {
    return Path::at(p.range());
  }
  return Path(q.range(), p.range(), std::move(rest));
}

bool path_less(Digraph const& g, Path const& a, Path const& b) {
  if (a.length() != b.length()) {
    return a.length() < b.length();
  }
  if (a.is_trivial()) {
    return a.source() < b.source();
  }
  return std::lexicographical_compare(
      a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
      [&g](edge_id x, edge_id y) { return g.edge_name(x) < g.edge_name(y); });
}

std::string to_string(Digraph const& g, Path const& p) {
  if (p.is_trivial()) {
    return "@" + g.vertex_name(p.source());
  }
  std::string out;
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += g.edge_name(p.edges()[i]);
  }
  return out;
}

Path parse_path(Digraph const& g, std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty path literal");
  }
  if (text.front() == '@') {
    auto v = g.find_vertex(text.substr(1));
    if (!v) {
      throw ParseError("unknown vertex '" + std::string(text.substr(1))
                       + "'");
    }
    return Path::at(*v);
  }
  std::vector<edge_id> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string_view name = (dot == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, dot - start);
    auto e = g.find_edge(name);
    if (!e) {
      throw ParseError("unknown edge '" + std::string(name) + "'");
    }
    edges.push_back(*e);
    if (dot == std::string_view::npos) {
      break;
    }
    start = dot + 1;
  }
  try {
    return Path::of(g, std::move(edges));
  } catch (Error const& err) {
    throw ParseError(err.what());
  }
}

std::vector<Path> enumerate_paths(Digraph const& g,
                                  std::optional<std::size_t> max_len) {
  if (!max_len && !g.is_acyclic()) {
    throw Error("infinite path set: the graph has a cycle, supply a length "
                "bound");
  }
  std::vector<Path> all;
  std::vector<Path> level;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    level.push_back(Path::at(v));
  }
  std::size_t len = 0;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (max_len && len == *max_len) {
      break;
    }
    std::vector<Path> next;
    for (Path const& p : level) {
      for (edge_id e : g.out_edges(p.range())) {
        std::vector<edge_id> edges = p.edges();
        edges.push_back(e);
        next.push_back(Path::of(g, std::move(edges)));
      }
    }
    level = std::move(next);
    ++len;
  }
  std::sort(all.begin(), all.end(), [&g](Path const& a, Path const& b) {
    return path_less(g, a, b);
  });
  return all;
}

}  // namespace gis
