#include "holonomy/report.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace holonomy {

  namespace {

    std::string pad(std::string s, std::size_t width) {
      if (s.size() < width) {
        s.append(width - s.size(), ' ');
      }
      return s;
    }

    Json word_json(GeneratorSet const& gens, Word const& w) {
      Json out = Json::array();
      for (std::size_t a : w) {
        out.push_back(gens.name(a));
      }
      return out;
    }

    Json set_json(Skeleton const& sk, SetIndex i) {
      Json out = Json::array();
      for (Point p : sk.set(i).points()) {
        out.push_back(p + 1);
      }
      return out;
    }

    Json coordinate_json(std::size_t level, Coordinate const& c) {
      if (!c) {
        return "*";
      }
      return Json::array({level, c->rep + 1, c->tile + 1});
    }

    Json element_json(ComponentElement const& e, std::size_t level) {
      Json out;
      if (e.is_constant()) {
        out["kind"]   = "constant";
        out["target"] = coordinate_json(level, e.target());
      } else {
        out["kind"]  = "permutation";
        out["block"] = e.block() + 1;
        Json images  = Json::array();
        for (std::size_t x : e.perm()) {
          images.push_back(x + 1);
        }
        out["images"] = images;
      }
      return out;
    }

    // Distinct prefixes of encoded chains at every level, in first-seen order.
    std::vector<std::vector<Coordinates>> reachable_prefixes(Cascade const& c,
                                                             std::size_t max_chains) {
      Skeleton const& sk = c.skeleton();
      std::vector<std::vector<Coordinates>> out(c.levels());
      std::vector<std::set<Coordinates>>    seen(c.levels());
      for (Chain const& chain : enumerate_maximal_chains(sk, max_chains)) {
        Coordinates const v = c.encode(position(sk, chain));
        for (std::size_t i = 1; i <= c.levels(); ++i) {
          Coordinates prefix(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i - 1));
          if (seen[i - 1].insert(prefix).second) {
            out[i - 1].push_back(std::move(prefix));
          }
        }
      }
      for (auto& level : out) {
        std::sort(level.begin(), level.end());
      }
      return out;
    }

  }  // namespace

  std::string format_set(Skeleton const& sk, SetIndex i) {
    return sk.set(i).to_string();
  }

  std::string format_chain(Skeleton const& sk, Chain const& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += format_set(sk, c[i]);
    }
    return out + "}";
  }

  std::string format_coordinate(std::size_t level, Coordinate const& c) {
    if (!c) {
      return "*";
    }
    return "(" + std::to_string(level) + "," + std::to_string(c->rep + 1) + ","
           + std::to_string(c->tile + 1) + ")";
  }

  std::string format_coordinates(Coordinates const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += format_coordinate(i + 1, v[i]);
    }
    return out + "]";
  }

  std::string format_element(ComponentElement const& e, std::size_t level) {
    if (e.is_constant()) {
      return "const " + format_coordinate(level, e.target());
    }
    return "perm " + cycle_notation(e.perm()) + " on block "
           + std::to_string(e.block() + 1);
  }

  std::string skeleton_text(Skeleton const& sk, std::optional<std::size_t> semigroup_size) {
    GeneratorSet const& gens = sk.generators();
    std::ostringstream  out;
    out << "points: " << sk.degree() << '\n';
    out << "generators:";
    for (std::size_t a = 0; a < gens.size(); ++a) {
      out << ' ' << gens.name(a) << '=' << gens[a].to_string();
    }
    out << '\n';
    if (semigroup_size) {
      out << "semigroup size: " << *semigroup_size << '\n';
    }
    out << "extended image set: " << sk.size() << '\n';
    out << "classes: " << sk.classes().size() << '\n';
    out << "levels: " << sk.levels() << "\n\nsets:\n";

    std::size_t width = 0;
    for (SetIndex i = 0; i < sk.size(); ++i) {
      width = std::max(width, format_set(sk, i).size());
    }
    for (SetIndex i = 0; i < sk.size(); ++i) {
      out << "  " << pad(format_set(sk, i), width) << "  depth " << sk.depth(i)
          << "  height " << sk.height(i) << "  class " << sk.class_of(i) + 1;
      if (sk.is_representative(i)) {
        out << "  representative";
      } else {
        out << "  to_rep " << gens.format(sk.to_rep(i)) << "  from_rep "
            << gens.format(sk.from_rep(i));
      }
      if (!sk.is_image(i)) {
        out << "  (not an image)";
      }
      out << '\n';
    }

    out << "\nclasses:\n";
    for (std::size_t c = 0; c < sk.classes().size(); ++c) {
      EquivalenceClass const& cls = sk.classes()[c];
      out << "  " << c + 1 << " [depth " << sk.depth(cls.representative) << "]:";
      for (SetIndex m : cls.members) {
        out << ' ' << format_set(sk, m);
      }
      out << '\n';
    }

    out << "\ntiles:\n";
    for (SetIndex i = 0; i < sk.size(); ++i) {
      if (sk.is_singleton(i)) {
        continue;
      }
      out << "  " << pad(format_set(sk, i), width) << " ->";
      for (SetIndex t : sk.tiles(i)) {
        out << ' ' << format_set(sk, t);
      }
      out << '\n';
    }
    return out.str();
  }

  Json skeleton_json(Skeleton const& sk, std::optional<std::size_t> semigroup_size) {
    GeneratorSet const& gens = sk.generators();
    Json                out;
    out["degree"] = sk.degree();
    Json g        = Json::array();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      g.push_back(Json{{"name", gens.name(a)}, {"images", gens[a].to_one_based()}});
    }
    out["generators"] = g;
    if (semigroup_size) {
      out["semigroup_size"] = *semigroup_size;
    }
    out["levels"] = sk.levels();
    Json sets     = Json::array();
    for (SetIndex i = 0; i < sk.size(); ++i) {
      Json s;
      s["index"]          = i;
      s["set"]            = set_json(sk, i);
      s["depth"]          = sk.depth(i);
      s["height"]         = sk.height(i);
      s["class"]          = sk.class_of(i) + 1;
      s["representative"] = sk.is_representative(i);
      s["image"]          = sk.is_image(i);
      s["to_rep"]         = word_json(gens, sk.to_rep(i));
      s["from_rep"]       = word_json(gens, sk.from_rep(i));
      Json tiles          = Json::array();
      if (!sk.is_singleton(i)) {
        for (SetIndex t : sk.tiles(i)) {
          tiles.push_back(t);
        }
      }
      s["tiles"] = tiles;
      sets.push_back(s);
    }
    out["sets"]    = sets;
    Json classes   = Json::array();
    for (EquivalenceClass const& cls : sk.classes()) {
      classes.push_back(Json{{"representative", cls.representative},
                             {"members", cls.members},
                             {"depth", sk.depth(cls.representative)}});
    }
    out["classes"] = classes;
    return out;
  }

  std::string holonomy_text(Holonomy const& hol, Skeleton const& sk) {
    GeneratorSet const& gens = sk.generators();
    std::ostringstream  out;
    for (HolonomyComponent const& comp : hol.components()) {
      out << "depth " << comp.depth << '\n';
      for (std::size_t r = 0; r < comp.representatives.size(); ++r) {
        HolonomyGroup const& g = *comp.groups[r];
        out << "  representative " << format_set(sk, g.representative) << "  tiles";
        for (std::size_t t = 0; t < g.tiles.size(); ++t) {
          out << ' ' << t + 1 << '=' << format_set(sk, g.tiles[t]);
        }
        out << "  order " << g.order() << '\n';
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
          out << "    " << cycle_notation(g.generators[i]) << "  via "
              << gens.format(g.witnesses[i]) << '\n';
        }
      }
    }
    return out.str();
  }

  Json holonomy_json(Holonomy const& hol, Skeleton const& sk) {
    GeneratorSet const& gens = sk.generators();
    Json                out  = Json::array();
    for (HolonomyComponent const& comp : hol.components()) {
      Json reps = Json::array();
      for (std::size_t r = 0; r < comp.representatives.size(); ++r) {
        HolonomyGroup const& g     = *comp.groups[r];
        Json                 tiles = Json::array();
        for (SetIndex t : g.tiles) {
          tiles.push_back(set_json(sk, t));
        }
        Json generators = Json::array();
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
          generators.push_back(Json{{"cycles", cycle_notation(g.generators[i])},
                                    {"witness", word_json(gens, g.witnesses[i])}});
        }
        reps.push_back(Json{{"set", set_json(sk, g.representative)},
                            {"tiles", tiles},
                            {"order", g.order()},
                            {"generators", generators}});
      }
      out.push_back(Json{{"depth", comp.depth},
                         {"representatives", reps},
                         {"states", comp.state_count()}});
    }
    return out;
  }

  std::string cascade_text(Cascade const& c, std::size_t max_chains) {
    Skeleton const&     sk   = c.skeleton();
    GeneratorSet const& gens = sk.generators();
    std::ostringstream  out;
    out << "levels: " << c.levels() << "\n\ncomponents:\n";
    for (HolonomyComponent const& comp : c.holonomy().components()) {
      out << "  " << comp.depth << ": " << comp.state_count() << " states, group order "
          << comp.group_order() << " + constants\n";
      for (std::size_t r = 0; r < comp.representatives.size(); ++r) {
        auto const& tiles = comp.groups[r]->tiles;
        out << "     block " << r + 1 << " " << format_set(sk, comp.representatives[r])
            << ":";
        for (std::size_t t = 0; t < tiles.size(); ++t) {
          out << ' ' << format_coordinate(comp.depth, Tile{r, t}) << '='
              << format_set(sk, tiles[t]);
        }
        out << '\n';
      }
    }
    auto const prefixes = reachable_prefixes(c, max_chains);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      out << "\ndependencies of " << gens.name(a) << ":\n";
      for (std::size_t i = 1; i <= c.levels(); ++i) {
        for (Coordinates const& prefix : prefixes[i - 1]) {
          out << "  level " << i << "  " << format_coordinates(prefix) << " -> "
              << format_element(c.dependency(a, i, prefix), i) << '\n';
        }
      }
    }
    return out.str();
  }

  Json cascade_json(Cascade const& c, std::size_t max_chains) {
    Skeleton const&     sk   = c.skeleton();
    GeneratorSet const& gens = sk.generators();
    Json                out;
    out["levels"]   = c.levels();
    Json components = Json::array();
    for (HolonomyComponent const& comp : c.holonomy().components()) {
      Json blocks = Json::array();
      for (std::size_t r = 0; r < comp.representatives.size(); ++r) {
        Json tiles = Json::array();
        for (SetIndex t : comp.groups[r]->tiles) {
          tiles.push_back(set_json(sk, t));
        }
        blocks.push_back(Json{{"representative", set_json(sk, comp.representatives[r])},
                              {"tiles", tiles},
                              {"order", comp.groups[r]->order()}});
      }
      components.push_back(Json{{"depth", comp.depth},
                                {"states", comp.state_count()},
                                {"blocks", blocks}});
    }
    out["components"]  = components;
    auto const prefixes = reachable_prefixes(c, max_chains);
    Json       deps     = Json::array();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      Json rows = Json::array();
      for (std::size_t i = 1; i <= c.levels(); ++i) {
        for (Coordinates const& prefix : prefixes[i - 1]) {
          Json p = Json::array();
          for (std::size_t j = 0; j < prefix.size(); ++j) {
            p.push_back(coordinate_json(j + 1, prefix[j]));
          }
          rows.push_back(Json{{"level", i},
                              {"prefix", p},
                              {"value", element_json(c.dependency(a, i, prefix), i)}});
        }
      }
      deps.push_back(Json{{"generator", gens.name(a)}, {"values", rows}});
    }
    out["dependencies"] = deps;
    return out;
  }

  std::string lift_table(Skeleton const& sk, Chain const& c, Word const& w) {
    Transformation const  t = sk.generators().evaluate(w);
    std::vector<SetIndex> moved;
    for (SetIndex P : c) {
      moved.push_back(sk.act(P, t));
    }
    Chain const lifted = lift_element(sk, t, c);
    std::string const word = sk.generators().format(w);

    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"C", "C.t", "C.lift(t)"});
    std::size_t const n = std::max(c.size(), lifted.size());
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({i < c.size() ? format_set(sk, c[i]) : "",
                      i < moved.size() ? format_set(sk, moved[i]) : "",
                      i < lifted.size() ? format_set(sk, lifted[i]) : ""});
    }
    std::array<std::size_t, 3> width{};
    for (auto const& r : rows) {
      for (std::size_t j = 0; j < 3; ++j) {
        width[j] = std::max(width[j], r[j].size());
      }
    }
    std::ostringstream out;
    out << "t = " << word << " = " << t.to_string() << '\n';
    for (auto const& r : rows) {
      out << pad(r[0], width[0]) << " | " << pad(r[1], width[1]) << " | " << r[2] << '\n';
    }
    return out.str();
  }

  std::string positioned_table(Cascade const& cascade, Chain const& c) {
    Skeleton const&        sk  = cascade.skeleton();
    PositionedChain const  pos = position(sk, c);
    Coordinates const      enc = cascade.encode(pos);
    std::vector<SetIndex> const a = alpha(sk, pos);

    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"depth", "C^pos", "enc", "alpha"});
    for (std::size_t i = 0; i < pos.slots.size(); ++i) {
      std::string e = "*";
      if (enc[i]) {
        e = format_set(sk, cascade.tile_set(i + 1, *enc[i])) + " "
            + format_coordinate(i + 1, enc[i]);
      }
      rows.push_back({std::to_string(i + 1),
                      pos.slots[i] ? format_set(sk, *pos.slots[i]) : "*",
                      e,
                      format_set(sk, a[i])});
    }
    std::array<std::size_t, 4> width{};
    for (auto const& r : rows) {
      for (std::size_t j = 0; j < 4; ++j) {
        width[j] = std::max(width[j], r[j].size());
      }
    }
    std::ostringstream out;
    for (auto const& r : rows) {
      out << pad(r[0], width[0]) << " | " << pad(r[1], width[1]) << " | "
          << pad(r[2], width[2]) << " | " << r[3] << '\n';
    }
    return out.str();
  }

  Json verify_json(Skeleton const&     sk,
                   VerifyReport const& embedding,
                   VerifyReport const& division) {
    auto one = [&sk](VerifyReport const& r) {
      Json violations = Json::array();
      for (Violation const& v : r.violations) {
        Json chain = Json::array();
        for (SetIndex P : v.chain) {
          chain.push_back(set_json(sk, P));
        }
        violations.push_back(Json{{"word", word_json(sk.generators(), v.word)},
                                  {"chain", chain},
                                  {"level", v.level}});
      }
      Json out;
      out["words_tested"]    = r.words_tested;
      out["chains_tested"]   = r.chains_tested;
      out["checks"]          = r.checks;
      out["violation_count"] = r.violation_count;
      out["violations"]      = violations;
      out["elapsed"]         = r.elapsed_seconds;
      return out;
    };
    Json out;
    out["passed"]    = embedding.passed() && division.passed();
    out["embedding"] = one(embedding);
    Json div         = one(division);
    div["surjective"] = division.surjective;
    out["division"]  = div;
    return out;
  }

}  // namespace holonomy
