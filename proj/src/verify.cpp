#include "holonomy/verify.hpp"

#include <chrono>
#include <random>

#include "holonomy/errors.hpp"

namespace holonomy {

  namespace {
    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point start) {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }

    std::vector<Word> words_for(std::size_t k, VerifyOptions const& opts) {
      std::vector<Word> words = all_words(k, opts.exhaustive_length);
      std::vector<Word> more
          = random_words(k, opts.words, opts.seed, opts.max_word_length);
      words.insert(words.end(), more.begin(), more.end());
      return words;
    }

    void record(VerifyReport&        report,
                VerifyOptions const& opts,
                Word const&          w,
                Chain const&         c,
                std::size_t          level) {
      ++report.violation_count;
      if (report.violations.size() < opts.max_recorded) {
        report.violations.push_back({w, c, level});
      }
    }
  }  // namespace

  std::vector<Word> random_words(std::size_t   generators,
                                 std::size_t   count,
                                 std::uint64_t seed,
                                 std::size_t   max_length) {
    std::vector<Word> out;
    if (generators == 0 || max_length == 0) {
      return out;
    }
    // Reduce raw engine output directly; the distributions in <random> are
    // not reproducible across standard libraries.
    std::mt19937_64 rng(seed);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const len = 1 + static_cast<std::size_t>(rng() % max_length);
      Word              w(len);
      for (std::size_t& letter : w) {
        letter = static_cast<std::size_t>(rng() % generators);
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  std::vector<Word> all_words(std::size_t generators, std::size_t max_length) {
    std::vector<Word> out;
    if (generators == 0) {
      return out;
    }
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<Word> next;
      for (Word const& w : layer) {
        for (std::size_t a = 0; a < generators; ++a) {
          next.push_back(concat(w, Word{a}));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  VerifyReport verify_embedding(Cascade const& cascade, VerifyOptions const& opts) {
    auto const          start = Clock::now();
    Skeleton const&     sk    = cascade.skeleton();
    ChainSemigroup const cs(sk, opts.max_chains);
    auto const&         chains = cs.chains();

    std::vector<Coordinates> enc;
    enc.reserve(chains.size());
    for (Chain const& c : chains) {
      enc.push_back(cascade.encode(position(sk, c)));
    }

    VerifyReport report;
    report.chains_tested = chains.size();
    for (Word const& w : words_for(sk.generators().size(), opts)) {
      ++report.words_tested;
      for (std::size_t c = 0; c < chains.size(); ++c) {
        ++report.checks;
        Coordinates const  lhs = cascade.apply_word(w, enc[c]);
        Coordinates const& rhs = enc[cs.lift_word(w, c)];
        for (std::size_t i = 0; i < lhs.size(); ++i) {
          if (lhs[i] != rhs[i]) {
            record(report, opts, w, chains[c], i + 1);
            break;
          }
        }
      }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  VerifyReport verify_division(Cascade const& cascade, VerifyOptions const& opts) {
    auto const           start = Clock::now();
    Skeleton const&      sk    = cascade.skeleton();
    GeneratorSet const&  gens  = sk.generators();
    std::vector<Chain> const chains = enumerate_maximal_chains(sk, opts.max_chains);

    std::vector<Coordinates> enc;
    std::vector<Point>       theta1;
    std::vector<bool>        hit(sk.degree(), false);
    for (Chain const& c : chains) {
      enc.push_back(cascade.encode(position(sk, c)));
      theta1.push_back(eta(sk, unposition(sk, cascade.decode(enc.back()))));
      hit[theta1.back()] = true;
    }

    VerifyReport report;
    report.chains_tested = chains.size();
    for (bool h : hit) {
      report.surjective = report.surjective && h;
    }
    for (Word const& u : words_for(gens.size(), opts)) {
      ++report.words_tested;
      Transformation const s = gens.evaluate(u);
      for (std::size_t c = 0; c < chains.size(); ++c) {
        ++report.checks;
        Coordinates const moved = cascade.apply_word(u, enc[c]);
        Point             image = 0;
        try {
          image = eta(sk, unposition(sk, cascade.decode(moved)));
        } catch (DomainError const&) {
          record(report, opts, u, chains[c], 0);
          continue;
        }
        if (image != s[theta1[c]]) {
          record(report, opts, u, chains[c], 0);
        }
      }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  bool inject_fault(Cascade& cascade) {
    if (cascade.levels() == 0) {
      return false;
    }
    // Level 1 always holds a tile for an encoded chain, so constant * is
    // wrong for every chain.
    cascade.override_dependency(0, 1, {}, ComponentElement::constant(std::nullopt));
    return true;
  }

}  // namespace holonomy
