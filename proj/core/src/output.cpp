#include "gis/output.hpp"

#include <algorithm>

#include "json.hpp"

namespace gis {

namespace {

std::string quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string hasse_to_dot(Digraph const& g, HasseDiagram const& h) {
  std::string dot = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    dot += "  n" + std::to_string(i) + " [label="
           + quote(to_string(g, h.nodes[i])) + "];\n";
  }
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (h.nodes[i].is_zero()) {
      dot += "  { rank=min; n" + std::to_string(i) + "; }\n";
    }
  }
  for (auto const& [lower, upper] : h.covers) {
    dot += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper)
           + ";\n";
  }
  dot += "}\n";
  return dot;
}

std::string hasse_to_json(Digraph const& g, HasseDiagram const& h) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (Element const& a : h.nodes) {
    j["nodes"].push_back(to_string(g, a));
  }
  j["covers"] = nlohmann::ordered_json::array();
  for (auto const& [lower, upper] : h.covers) {
    j["covers"].push_back({lower, upper});
  }
  return j.dump(2) + "\n";
}

std::string classes_to_dot(Digraph const& g,
                           std::vector<std::vector<Element>> const& classes,
                           GreenRelation rel) {
  std::string dot = "digraph ";
  dot += (rel == GreenRelation::D) ? "eggbox" : "classes";
  dot += " {\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto const& block = classes[k];
    std::string label = "<<TABLE BORDER=\"0\" CELLBORDER=\"1\" "
                        "CELLSPACING=\"0\">";
    if (rel == GreenRelation::D && !block.front().is_zero()) {
      // Egg-box: rows are R-classes (shared left path), columns are
      // L-classes (shared right path). Every cell of a D-class is
      // occupied, since all paths involved end at one vertex.
      std::vector<Path> lefts;
      std::vector<Path> rights;
      for (Element const& a : block) {
        if (std::find(lefts.begin(), lefts.end(), a.left()) == lefts.end()) {
          lefts.push_back(a.left());
        }
        if (std::find(rights.begin(), rights.end(), a.right())
            == rights.end()) {
          rights.push_back(a.right());
        }
      }
      auto order = [&g](Path const& x, Path const& y) {
        return path_less(g, x, y);
      };
      std::sort(lefts.begin(), lefts.end(), order);
      std::sort(rights.begin(), rights.end(), order);
      for (Path const& p : lefts) {
        label += "<TR>";
        for (Path const& q : rights) {
          label += "<TD>" + to_string(g, make_element(p, q)) + "</TD>";
        }
        label += "</TR>";
      }
    } else {
      for (Element const& a : block) {
        label += "<TR><TD>" + to_string(g, a) + "</TD></TR>";
      }
    }
    label += "</TABLE>>";
    dot += "  c" + std::to_string(k) + " [label=" + label + "];\n";
  }
  dot += "}\n";
  return dot;
}

std::string classes_to_json(Digraph const& g,
                            std::vector<std::vector<Element>> const& classes,
                            GreenRelation rel) {
  nlohmann::ordered_json j;
  j["relation"] = std::string(1, to_char(rel));
  j["classes"] = nlohmann::ordered_json::array();
  for (auto const& block : classes) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Element const& a : block) {
      arr.push_back(to_string(g, a));
    }
    j["classes"].push_back(std::move(arr));
  }
  return j.dump(2) + "\n";
}

}  // namespace gis
