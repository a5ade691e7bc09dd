#include "gis/structure.hpp"

#include <algorithm>

namespace gis {

namespace {

// Group paths by range vertex and return all co-terminal pairs plus
// zero, sorted canonically.
std::vector<Element> pair_up(Digraph const& g, std::vector<Path> const& paths) {
  std::vector<std::vector<Path>> by_range(g.vertex_count());
  for (Path const& p : paths) {
    by_range[p.range()].push_back(p);
  }
  std::vector<Element> elements;
  elements.push_back(Element::zero());
  for (auto const& bucket : by_range) {
    for (Path const& p : bucket) {
      for (Path const& q : bucket) {
        elements.push_back(make_element(p, q));
      }
    }
  }
  std::sort(elements.begin(), elements.end(),
            [&g](Element const& a, Element const& b) {
              return element_less(g, a, b);
            });
  return elements;
}

std::vector<Element> idempotents_of(SemigroupTable const& t) {
  std::vector<Element> out;
  for (Element const& a : t.elements()) {
    if (is_idempotent(a)) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> SemigroupTable::index_of(Element const& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a,
                             [this](Element const& x, Element const& y) {
                               return element_less(*graph_, x, y);
                             });
  if (it == elements_.end() || !(*it == a)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

SemigroupTable enumerate(Digraph const& g, std::optional<std::size_t> bound) {
  if (!bound && !g.is_acyclic()) {
    throw Error("the semigroup is infinite: the graph has a cycle, supply a "
                "bound");
  }
  return SemigroupTable(g, pair_up(g, enumerate_paths(g, bound)), bound);
}

HasseDiagram idempotent_lattice(SemigroupTable const& t) {
  HasseDiagram h;
  h.nodes = idempotents_of(t);
  std::size_t const n = h.nodes.size();
  std::vector<std::vector<bool>> strictly_below(n,
                                                std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      strictly_below[i][j] =
          i != j && nat_leq(h.nodes[i], h.nodes[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictly_below[i][j]) {
        continue;
      }
      bool covered = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (strictly_below[i][k] && strictly_below[k][j]) {
          covered = false;
          break;
        }
      }
      if (covered) {
        h.covers.emplace_back(i, j);
      }
    }
  }
  std::sort(h.covers.begin(), h.covers.end());
  return h;
}

std::vector<Element> maximal_idempotents(SemigroupTable const& t) {
  auto idem = idempotents_of(t);
  std::vector<Element> out;
  for (Element const& e : idem) {
    bool maximal = true;
    for (Element const& f : idem) {
      if (!(f == e) && nat_leq(e, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(e);
    }
  }
  return out;
}

MinimalIdempotents minimal_nonzero_idempotents(SemigroupTable const& t) {
  auto idem = idempotents_of(t);
  MinimalIdempotents result;
  result.truncated = !t.exact();
  for (Element const& e : idem) {
    if (e.is_zero()) {
      continue;
    }
    bool minimal = true;
    for (Element const& f : idem) {
      if (!f.is_zero() && !(f == e) && nat_leq(f, e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      result.elements.push_back(e);
    }
  }
  return result;
}

bool is_primitive(Digraph const& g) { return g.is_totally_disconnected(); }

bool is_primitive_by_definition(SemigroupTable const& t) {
  auto idem = idempotents_of(t);
  for (Element const& e : idem) {
    for (Element const& f : idem) {
      if (!e.is_zero() && !f.is_zero() && !(e == f) && nat_leq(e, f)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Element> local_submonoid(Digraph const& g, Element const& e,
                                     std::optional<std::size_t> bound) {
  if (e.is_zero() || !is_idempotent(e)) {
    throw Error("local submonoids are taken at nonzero idempotents");
  }
  if (!bound && !g.is_acyclic()) {
    throw Error("the local submonoid is infinite: the graph has a cycle, "
                "supply a bound");
  }
  Path const& p = e.left();
  // Tail length budget for u in p·u.
  std::optional<std::size_t> tail;
  if (bound) {
    tail = (*bound >= p.length()) ? *bound - p.length() : 0;
  }
  std::vector<Path> continuations;
  if (!bound || *bound >= p.length()) {
    for (Path const& u : enumerate_paths(g, tail)) {
      if (u.source() == p.range()) {
        continuations.push_back(*concat(p, u));
      }
    }
  }
  return pair_up(g, continuations);
}

bool is_local_submonoid_trivial(Digraph const& g, vertex_id v) {
  return g.is_sink(v);
}

std::optional<GreenRelation> parse_green_relation(std::string_view text) {
  if (text == "L") return GreenRelation::L;
  if (text == "R") return GreenRelation::R;
  if (text == "H") return GreenRelation::H;
  if (text == "D") return GreenRelation::D;
  if (text == "J") return GreenRelation::J;
  return std::nullopt;
}

char to_char(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::L: return 'L';
    case GreenRelation::R: return 'R';
    case GreenRelation::H: return 'H';
    case GreenRelation::D: return 'D';
    case GreenRelation::J: return 'J';
  }
  throw Error("invalid Green relation");
}

bool green_related(Digraph const& g, Element const& a, Element const& b,
                   GreenRelation rel) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  switch (rel) {
    case GreenRelation::L:
      return a.right() == b.right();
    case GreenRelation::R:
      return a.left() == b.left();
    case GreenRelation::H:
      return a == b;
    case GreenRelation::D:
      return a.left().range() == b.left().range();
    case GreenRelation::J:
      return g.scc_index(a.left().range()) == g.scc_index(b.left().range());
  }
  throw Error("invalid Green relation");
}

std::vector<std::vector<Element>> green_classes(SemigroupTable const& t,
                                                GreenRelation rel) {
  std::vector<std::vector<Element>> classes;
  for (Element const& a : t.elements()) {
    bool placed = false;
    for (auto& block : classes) {
      if (green_related(t.graph(), block.front(), a, rel)) {
        block.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({a});
    }
  }
  return classes;
}

}  // namespace gis
