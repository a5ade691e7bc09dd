#include "gis/element.hpp"

#include <cctype>
#include <utility>

namespace gis {

Path const& Element::left() const {
  if (!parts_) {
    throw Error("zero has no path components");
  }
  return parts_->first;
}

Path const& Element::right() const {
  if (!parts_) {
    throw Error("zero has no path components");
  }
  return parts_->second;
}

Element make_element(Path left, Path right) {
  if (left.range() != right.range()) {
    throw Error("not co-terminal: the two paths have different ranges");
  }
  return Element(std::move(left), std::move(right));
}

Element multiply(Element const& a, Element const& b) {
  if (a.is_zero() || b.is_zero()) {
    return Element::zero();
  }
  if (auto t = strip_prefix(b.left(), a.right())) {
    return make_element(*concat(a.left(), *t), b.right());
  }
  if (auto t = strip_prefix(a.right(), b.left())) {
    return make_element(a.left(), *concat(b.right(), *t));
  }
  return Element::zero();
}

Element inverse(Element const& a) {
  if (a.is_zero()) {
    return Element::zero();
  }
  return make_element(a.right(), a.left());
}

bool is_idempotent(Element const& a) {
  return a.is_zero() || a.left() == a.right();
}

bool nat_leq(Element const& a, Element const& b) {
  if (!is_idempotent(a) || !is_idempotent(b)) {
    throw Error("nat_leq requires idempotent arguments");
  }
  if (a.is_zero()) {
    return true;
  }
  if (b.is_zero()) {
    return false;
  }
  return strip_prefix(a.left(), b.left()).has_value();
}

bool element_less(Digraph const& g, Element const& a, Element const& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && !b.is_zero();
  }
  if (a.right() != b.right()) {
    return path_less(g, a.right(), b.right());
  }
  return path_less(g, a.left(), b.left());
}

std::string to_string(Digraph const& g, Element const& a) {
  if (a.is_zero()) {
    return "0";
  }
  return to_string(g, a.left()) + "|" + to_string(g, a.right());
}

Element parse_element(Digraph const& g, std::string_view text) {
  if (text == "0") {
    return Element::zero();
  }
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos
      || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("expected '0' or '<path>|<path>', got '"
                     + std::string(text) + "'");
  }
  Path left = parse_path(g, text.substr(0, bar));
  Path right = parse_path(g, text.substr(bar + 1));
  if (left.range() != right.range()) {
    throw ParseError("not co-terminal: '" + std::string(text) + "'");
  }
  return make_element(std::move(left), std::move(right));
}

Word parse_word(Digraph const& g, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size()
           && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i) {
      break;
    }
    std::string_view token = text.substr(i, j - i);
    i = j;
    if (token.size() > 1 && token.back() == '*') {
      auto e = g.find_edge(token.substr(0, token.size() - 1));
      if (!e) {
        throw ParseError("unknown token '" + std::string(token)
                         + "': no such edge");
      }
      w.push_back({Generator::Kind::ghost, *e});
      continue;
    }
    if (auto v = g.find_vertex(token)) {
      w.push_back({Generator::Kind::vertex, *v});
    } else if (auto e = g.find_edge(token)) {
      w.push_back({Generator::Kind::edge, *e});
    } else {
      throw ParseError("unknown token '" + std::string(token) + "'");
    }
  }
  return w;
}

std::string to_string(Digraph const& g, Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    switch (w[i].kind) {
      case Generator::Kind::vertex:
        out += g.vertex_name(w[i].index);
        break;
      case Generator::Kind::edge:
        out += g.edge_name(w[i].index);
        break;
      case Generator::Kind::ghost:
        out += g.edge_name(w[i].index);
        out += '*';
        break;
    }
  }
  return out;
}

Element generator_element(Digraph const& g, Generator const& t) {
  switch (t.kind) {
    case Generator::Kind::vertex:
      return make_element(Path::at(t.index), Path::at(t.index));
    case Generator::Kind::edge:
      return make_element(Path::of(g, {t.index}), Path::at(g.range(t.index)));
    case Generator::Kind::ghost:
      return make_element(Path::at(g.range(t.index)), Path::of(g, {t.index}));
  }
  throw Error("invalid generator kind");
}

Element reduce_word(Digraph const& g, Word const& w) {
  if (w.empty()) {
    throw Error("cannot reduce an empty word");
  }
  Element acc = generator_element(g, w.front());
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = multiply(acc, generator_element(g, w[i]));
  }
  return acc;
}

}  // namespace gis
