#include "holonomy/dot.hpp"

#include <sstream>

namespace holonomy {

  std::string skeleton_dot(Skeleton const& sk, Holonomy const& hol) {
    GeneratorSet const& gens = sk.generators();
    std::ostringstream  out;
    out << "digraph skeleton {\n";
    out << "  rankdir=TB;\n";
    out << "  node [fontname=\"monospace\"];\n";

    for (std::size_t c = 0; c < sk.classes().size(); ++c) {
      EquivalenceClass const& cls = sk.classes()[c];
      bool const nontrivial = !sk.is_singleton(cls.representative)
                              && !hol.group(cls.representative).trivial();
      out << "  subgraph cluster_" << c << " {\n";
      if (nontrivial) {
        out << "    style=filled; fillcolor=lightgrey;\n";
        out << "    label=\"order " << hol.group(cls.representative).order() << "\";\n";
      } else {
        out << "    style=dashed; label=\"\";\n";
      }
      for (SetIndex m : cls.members) {
        out << "    s" << m << " [label=\"" << sk.set(m).to_string() << "\", shape="
            << (m == cls.representative ? "box" : "ellipse") << "];\n";
      }
      out << "  }\n";
    }

    for (EquivalenceClass const& cls : sk.classes()) {
      SetIndex const R = cls.representative;
      if (sk.is_singleton(R)) {
        continue;
      }
      for (SetIndex T : sk.tiles(R)) {
        out << "  s" << R << " -> s" << T;
        std::optional<Word> const w = sk.word_between(R, T);
        std::string attrs;
        if (w) {
          attrs = "label=\"" + gens.format(*w) + "\"";
        }
        if (!sk.is_image(T)) {
          attrs += std::string(attrs.empty() ? "" : ", ") + "style=dotted";
        }
        if (!attrs.empty()) {
          out << " [" << attrs << "]";
        }
        out << ";\n";
      }
    }

    std::size_t const bottom = sk.levels() + 1;
    for (std::size_t d = 1; d <= bottom; ++d) {
      out << "  depth_" << d << " [shape=plaintext, label=\"depth " << d << "\"];\n";
    }
    for (std::size_t d = 1; d < bottom; ++d) {
      out << "  depth_" << d << " -> depth_" << d + 1 << " [style=invis];\n";
    }
    for (std::size_t d = 1; d <= bottom; ++d) {
      out << "  {rank=same; depth_" << d << ";";
      for (SetIndex i = 0; i < sk.size(); ++i) {
        if (sk.depth(i) == d) {
          out << " s" << i << ";";
        }
      }
      out << "}\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace holonomy
