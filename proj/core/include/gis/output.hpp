#ifndef GIS_OUTPUT_HPP_
#define GIS_OUTPUT_HPP_

#include <string>
#include <vector>

#include "gis/digraph.hpp"
#include "gis/element.hpp"
#include "gis/structure.hpp"

namespace gis {

/// DOT digraph of a Hasse diagram: nodes labeled with element syntax,
/// cover edges drawn bottom-to-top, zero pinned to the bottom rank.
std::string hasse_to_dot(Digraph const& g, HasseDiagram const& h);

/// {"nodes": [...], "covers": [[lower, upper], ...]}.
std::string hasse_to_json(Digraph const& g, HasseDiagram const& h);

/// DOT summary of a class partition. D-classes are rendered as egg-box
/// tables (rows share a left path, columns share a right path); other
/// relations list each class as a cluster.
std::string classes_to_dot(Digraph const& g,
                           std::vector<std::vector<Element>> const& classes,
                           GreenRelation rel);

/// {"relation": "D", "classes": [[...], ...]}.
std::string classes_to_json(Digraph const& g,
                            std::vector<std::vector<Element>> const& classes,
                            GreenRelation rel);

}  // namespace gis

#endif  // GIS_OUTPUT_HPP_
