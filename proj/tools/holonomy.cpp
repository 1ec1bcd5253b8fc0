// holonomy: compute and inspect the holonomy decomposition of a finite
// transformation semigroup.
//
//   holonomy skeleton [--json] [--dot FILE] INPUT
//   holonomy holonomy [--json] INPUT
//   holonomy cascade  [--json] [--max-chains N] INPUT
//   holonomy chains   [--chain SETS] [--lift WORD] INPUT
//   holonomy verify   [--words N] [--seed N] [--inject-fault] INPUT
//
// INPUT is a file path or "-" for stdin. Exit status: 0 ok, 1 verification
// failure, 2 input error, 3 budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "holonomy/dot.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/input.hpp"
#include "holonomy/report.hpp"
#include "holonomy/semigroup.hpp"

namespace {

  using namespace holonomy;

  enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3 };

  struct Options {
    std::string                  input = "-";
    bool                         json  = false;
    std::string                  dot;
    std::optional<std::size_t>   budget;
    std::size_t                  max_chains = kDefaultBudget;
    std::size_t                  words      = 1000;
    std::optional<std::uint64_t> seed;
    std::size_t                  max_length = 8;
    std::size_t                  exhaustive = 0;
    bool                         inject     = false;
    std::string                  chain;
    std::string                  lift;
  };

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw ParseError("cannot write " + path);
    }
  }

  // Letters by name, separated by blanks or commas; "id" or "" is the empty
  // word.
  Word parse_word(GeneratorSet const& gens, std::string const& text) {
    Word        w;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string        tok;
    while (in >> tok) {
      if (tok == "id") {
        continue;
      }
      auto const& names = gens.names();
      auto        it    = std::find(names.begin(), names.end(), tok);
      if (it == names.end()) {
        throw ParseError("field lift: unknown generator '" + tok + "'");
      }
      w.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    return w;
  }

  // "{1,2,3},{1,2},{1}" → chain of set indices, top-down.
  Chain parse_chain(Skeleton const& sk, std::string const& text) {
    Chain       c;
    std::size_t i = 0;
    while (true) {
      i = text.find('{', i);
      if (i == std::string::npos) {
        break;
      }
      std::size_t const j = text.find('}', i);
      if (j == std::string::npos) {
        throw ParseError("field chain: unterminated '{'");
      }
      std::vector<int>   points;
      std::string        body = text.substr(i + 1, j - i - 1);
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream in(body);
      std::string        tok;
      while (in >> tok) {
        try {
          points.push_back(std::stoi(tok));
        } catch (std::exception const&) {
          throw ParseError("field chain: bad point '" + tok + "'");
        }
        if (points.back() < 1 || static_cast<std::size_t>(points.back()) > sk.degree()) {
          throw ParseError("field chain: point " + tok + " out of range");
        }
      }
      auto const idx = sk.find(StateSubset::from_one_based(points));
      if (!idx) {
        throw ParseError("field chain: " + text.substr(i, j - i + 1)
                         + " is not in the extended image set");
      }
      c.push_back(*idx);
      i = j + 1;
    }
    if (c.empty()) {
      throw ParseError("field chain: no sets given");
    }
    if (!is_maximal_chain(sk, c)) {
      throw ParseError("field chain: not a maximal chain");
    }
    return c;
  }

  int cmd_skeleton(Options const& o, InputDocument const& doc) {
    Skeleton const sk(doc.generator_set());
    std::size_t const budget = o.budget.value_or(doc.budget.value_or(kDefaultBudget));
    std::size_t const size = enumerate(sk.generators(), budget).size();
    if (o.json) {
      std::cout << skeleton_json(sk, size).dump(2) << '\n';
    } else {
      std::cout << skeleton_text(sk, size);
    }
    if (!o.dot.empty()) {
      Holonomy const hol(sk, budget);
      write_file(o.dot, skeleton_dot(sk, hol));
    }
    return kOk;
  }

  int cmd_holonomy(Options const& o, InputDocument const& doc) {
    Skeleton const sk(doc.generator_set());
    Holonomy const hol(sk, o.budget.value_or(doc.budget.value_or(kDefaultBudget)));
    if (o.json) {
      std::cout << holonomy_json(hol, sk).dump(2) << '\n';
    } else {
      std::cout << holonomy_text(hol, sk);
    }
    return kOk;
  }

  int cmd_cascade(Options const& o, InputDocument const& doc) {
    Decomposition const d(doc.generator_set(),
                          o.budget.value_or(doc.budget.value_or(kDefaultBudget)));
    if (o.json) {
      std::cout << cascade_json(d.cascade(), o.max_chains).dump(2) << '\n';
    } else {
      std::cout << cascade_text(d.cascade(), o.max_chains);
    }
    return kOk;
  }

  int cmd_chains(Options const& o, InputDocument const& doc) {
    Decomposition const d(doc.generator_set(),
                          o.budget.value_or(doc.budget.value_or(kDefaultBudget)));
    Skeleton const&     sk = d.skeleton();
    if (o.chain.empty()) {
      if (!o.lift.empty()) {
        throw ParseError("field lift: requires --chain");
      }
      for (Chain const& c : enumerate_maximal_chains(sk, o.max_chains)) {
        std::cout << format_chain(sk, c) << '\n';
      }
      return kOk;
    }
    Chain const c = parse_chain(sk, o.chain);
    if (!o.lift.empty()) {
      std::cout << lift_table(sk, c, parse_word(sk.generators(), o.lift));
    } else {
      std::cout << positioned_table(d.cascade(), c);
    }
    return kOk;
  }

  int cmd_verify(Options const& o, InputDocument const& doc) {
    Decomposition d(doc.generator_set(),
                    o.budget.value_or(doc.budget.value_or(kDefaultBudget)));
    if (o.inject) {
      inject_fault(d.cascade());
    }
    VerifyOptions v;
    v.words             = o.words;
    v.seed              = o.seed.value_or(doc.seed.value_or(0));
    v.max_word_length   = o.max_length;
    v.max_chains        = o.max_chains;
    v.exhaustive_length = o.exhaustive;
    VerifyReport const emb = verify_embedding(d.cascade(), v);
    VerifyReport const div = verify_division(d.cascade(), v);
    Json out = verify_json(d.skeleton(), emb, div);
    if (!o.json) {
      // Elapsed times vary between runs; keep the default output stable.
      out["embedding"].erase("elapsed");
      out["division"].erase("elapsed");
    }
    std::cout << out.dump(2) << '\n';
    return emb.passed() && div.passed() ? kOk : kVerifyFailed;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomy decomposition of finite transformation semigroups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file, or - for stdin");
    sub->add_option("--budget", o.budget, "Element budget for enumerations");
  };

  auto* skeleton = app.add_subcommand("skeleton", "Extended image set, classes, tiles, depths");
  add_common(skeleton);
  skeleton->add_flag("--json", o.json, "JSON output");
  skeleton->add_option("--dot", o.dot, "Write a Graphviz diagram to FILE");

  auto* holonomy = app.add_subcommand("holonomy", "Holonomy groups per depth");
  add_common(holonomy);
  holonomy->add_flag("--json", o.json, "JSON output");

  auto* cascade = app.add_subcommand("cascade", "Components and dependency tables");
  add_common(cascade);
  cascade->add_flag("--json", o.json, "JSON output");
  cascade->add_option("--max-chains", o.max_chains, "Chain enumeration budget");

  auto* chains = app.add_subcommand("chains", "Maximal chains, lift and positioned tables");
  add_common(chains);
  chains->add_option("--max-chains", o.max_chains, "Chain enumeration budget");
  chains->add_option("--chain", o.chain, "Maximal chain, e.g. \"{1,2,3},{1,2},{1}\"");
  chains->add_option("--lift", o.lift, "Word of generator names to lift")
      ->needs(chains->get_option("--chain"));

  auto* verify = app.add_subcommand("verify", "Replay checks of embedding and division");
  add_common(verify);
  verify->add_flag("--json", o.json, "Include elapsed times");
  verify->add_option("--words", o.words, "Number of random words");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--max-length", o.max_length, "Longest random word")
      ->check(CLI::PositiveNumber);
  verify->add_option("--exhaustive", o.exhaustive, "Also test all words up to this length");
  verify->add_option("--max-chains", o.max_chains, "Chain enumeration budget");
  verify->add_flag("--inject-fault", o.inject, "Corrupt one dependency value first");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    InputDocument const doc = parse_input(read_input(o.input));
    if (skeleton->parsed()) {
      return cmd_skeleton(o, doc);
    }
    if (holonomy->parsed()) {
      return cmd_holonomy(o, doc);
    }
    if (cascade->parsed()) {
      return cmd_cascade(o, doc);
    }
    if (chains->parsed()) {
      return cmd_chains(o, doc);
    }
    return cmd_verify(o, doc);
  } catch (BudgetExceeded const& e) {
    std::cerr << "holonomy: " << e.what() << '\n';
    return kBudget;
  } catch (ParseError const& e) {
    std::cerr << "holonomy: " << e.what() << '\n';
    return kInputError;
  } catch (DomainError const& e) {
    std::cerr << "holonomy: " << e.what() << '\n';
    return kInputError;
  } catch (Error const& e) {
    std::cerr << "holonomy: internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
