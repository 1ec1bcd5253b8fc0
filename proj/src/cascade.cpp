#include "holonomy/cascade.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "holonomy/errors.hpp"

namespace holonomy {

  namespace {
    struct KeyHash {
      std::size_t operator()(std::vector<std::uint32_t> const& k) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::uint32_t x : k) {
          h ^= x;
          h *= 1099511628211ULL;
        }
        return h;
      }
    };

    std::size_t tile_ordinal(std::vector<SetIndex> const& tiles, SetIndex T) {
      auto it = std::find(tiles.begin(), tiles.end(), T);
      return it == tiles.end() ? tiles.size()
                               : static_cast<std::size_t>(it - tiles.begin());
    }
  }  // namespace

  struct Cascade::Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::vector<std::uint32_t>, ComponentElement, KeyHash>
        values;
    std::unordered_map<std::vector<std::uint32_t>, ComponentElement, KeyHash>
        overrides;
  };

  Cascade::Cascade(Skeleton const& sk, Holonomy const& hol)
      : sk_(&sk), hol_(&hol), memo_(std::make_unique<Memo>()) {
    for (HolonomyComponent const& comp : hol.components()) {
      std::vector<std::size_t> offsets;
      std::size_t              total = 0;
      for (std::size_t r = 0; r < comp.representatives.size(); ++r) {
        offsets.push_back(total);
        total += comp.block_size(r);
      }
      block_offset_.push_back(std::move(offsets));
    }
  }

  Cascade::~Cascade() = default;

  SetIndex Cascade::tile_set(std::size_t level, Tile t) const {
    HolonomyComponent const& comp = hol_->component(level);
    if (t.rep >= comp.representatives.size() || t.tile >= comp.block_size(t.rep)) {
      throw DomainError("no tile (" + std::to_string(level) + ","
                        + std::to_string(t.rep + 1) + ","
                        + std::to_string(t.tile + 1) + ")");
    }
    return comp.groups[t.rep]->tiles[t.tile];
  }

  Coordinate Cascade::encode_level(PositionedChain const& p,
                                   std::size_t            level) const {
    auto const& slot = p.slots.at(level - 1);
    if (!slot) {
      return std::nullopt;
    }
    SetIndex const P = alpha_at(p, level);
    SetIndex const R = sk_->representative(P);
    SetIndex const T = sk_->act(*slot, sk_->to_rep_map(P));
    HolonomyComponent const& comp = hol_->component(level);
    auto const               r    = comp.ordinal_of(R);
    if (!r) {
      throw InvariantViolation(sk_->set(R).to_string()
                               + " is not a representative at depth "
                               + std::to_string(level));
    }
    std::size_t const t = tile_ordinal(comp.groups[*r]->tiles, T);
    if (t == comp.groups[*r]->tiles.size()) {
      throw InvariantViolation(sk_->set(T).to_string() + " is not a tile of "
                               + sk_->set(R).to_string());
    }
    return Tile{*r, t};
  }

  Coordinates Cascade::encode(PositionedChain const& p) const {
    if (p.slots.size() != levels()) {
      throw DomainError("positioned chain has " + std::to_string(p.slots.size())
                        + " slots, expected " + std::to_string(levels()));
    }
    Coordinates v(levels());
    for (std::size_t i = 1; i <= levels(); ++i) {
      v[i - 1] = encode_level(p, i);
    }
    return v;
  }

  std::optional<PositionedChain> Cascade::decode_prefix(
      std::span<Coordinate const> prefix,
      std::size_t*                bad_level) const {
    PositionedChain p;
    p.slots.assign(levels(), std::nullopt);
    SetIndex current = Skeleton::top();
    for (std::size_t j = 1; j <= prefix.size(); ++j) {
      Coordinate const& vj     = prefix[j - 1];
      bool const        active = sk_->depth(current) == j;
      if (!vj) {
        if (active) {
          *bad_level = j;
          return std::nullopt;
        }
        continue;
      }
      HolonomyComponent const& comp = hol_->component(j);
      if (!active || vj->rep >= comp.representatives.size()
          || comp.representatives[vj->rep] != sk_->representative(current)
          || vj->tile >= comp.block_size(vj->rep)) {
        *bad_level = j;
        return std::nullopt;
      }
      SetIndex const T = comp.groups[vj->rep]->tiles[vj->tile];
      current          = sk_->act(T, sk_->from_rep_map(current));
      p.slots[j - 1]   = current;
    }
    return p;
  }

  PositionedChain Cascade::decode(Coordinates const& v) const {
    if (v.size() != levels()) {
      throw DomainError("coordinate vector has " + std::to_string(v.size())
                        + " entries, expected " + std::to_string(levels()));
    }
    std::size_t bad = 0;
    auto        p   = decode_prefix(v, &bad);
    if (!p) {
      throw DomainError("coordinates are not decodable at level "
                        + std::to_string(bad));
    }
    return *p;
  }

  bool Cascade::is_reachable_prefix(std::span<Coordinate const> prefix) const {
    std::size_t bad = 0;
    return prefix.size() <= levels() && decode_prefix(prefix, &bad).has_value();
  }

  std::vector<std::uint32_t> Cascade::memo_key(
      std::size_t                 a,
      std::size_t                 level,
      std::span<Coordinate const> prefix) const {
    std::vector<std::uint32_t> key;
    key.reserve(prefix.size() + 2);
    key.push_back(static_cast<std::uint32_t>(a));
    key.push_back(static_cast<std::uint32_t>(level));
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      Coordinate const& c = prefix[j];
      if (!c) {
        key.push_back(0);
        continue;
      }
      // Ordinals past the block sizes are left distinct; they decode to
      // nothing anyway.
      std::size_t const offset = c->rep < block_offset_[j].size()
                                     ? block_offset_[j][c->rep]
                                     : (std::size_t{1} << 20) + c->rep * 4096;
      key.push_back(static_cast<std::uint32_t>(1 + offset + c->tile));
    }
    return key;
  }

  ComponentElement Cascade::dependency(std::size_t                 a,
                                       std::size_t                 level,
                                       std::span<Coordinate const> prefix) const {
    if (a >= sk_->generators().size()) {
      throw DomainError("generator " + std::to_string(a + 1) + " out of range");
    }
    if (level < 1 || level > levels() || prefix.size() != level - 1) {
      throw DomainError("dependency function of level " + std::to_string(level)
                        + " takes a prefix of length " + std::to_string(level - 1));
    }
    auto key = memo_key(a, level, prefix);
    {
      std::shared_lock lock(memo_->mutex);
      if (auto it = memo_->overrides.find(key); it != memo_->overrides.end()) {
        return it->second;
      }
      if (auto it = memo_->values.find(key); it != memo_->values.end()) {
        return it->second;
      }
    }
    ComponentElement value = compute_dependency(a, level, prefix);
    std::unique_lock lock(memo_->mutex);
    return memo_->values.emplace(std::move(key), std::move(value)).first->second;
  }

  ComponentElement Cascade::compute_dependency(
      std::size_t                 a,
      std::size_t                 level,
      std::span<Coordinate const> prefix) const {
    std::size_t bad     = 0;
    auto        partial = decode_prefix(prefix, &bad);
    if (!partial) {
      return ComponentElement::constant(std::nullopt);
    }
    // Any completion of the prefix agrees down to alpha_level; use the
    // canonical one.
    PositionedChain const C = position(*sk_, dominate(*sk_, unposition(*sk_, *partial)));
    PositionedChain const D = position(*sk_, LiftedGenerator(*sk_, a)(unposition(*sk_, C)));
    SetIndex const        P = alpha_at(C, level);
    SetIndex const        Q = alpha_at(D, level);
    if (sk_->depth(Q) != level) {
      return ComponentElement::constant(std::nullopt);
    }
    SetIndex const Pa = sk_->act(P, a);
    if (Pa == Q) {
      SetIndex const R = sk_->representative(Q);
      if (sk_->representative(P) != R) {
        throw InvariantViolation(sk_->set(P).to_string() + " and "
                                 + sk_->set(Q).to_string()
                                 + " have different representatives");
      }
      HolonomyComponent const& comp  = hol_->component(level);
      std::size_t const        r     = *comp.ordinal_of(R);
      auto const&              tiles = comp.groups[r]->tiles;
      Transformation const     t     = compose(
          compose(sk_->from_rep_map(P), sk_->generators()[a]), sk_->to_rep_map(Q));
      Permutation perm(tiles.size());
      for (std::size_t i = 0; i < tiles.size(); ++i) {
        perm[i] = tile_ordinal(tiles, sk_->act(tiles[i], t));
        if (perm[i] == tiles.size()) {
          throw InvariantViolation("roundtrip does not permute the tiles of "
                                   + sk_->set(R).to_string());
        }
      }
      return ComponentElement::permutation(r, std::move(perm));
    }
    if (!sk_->set(Pa).proper_subset_of(sk_->set(Q))) {
      throw InvariantViolation("chain action is not inclusion-compatible at level "
                               + std::to_string(level));
    }
    return ComponentElement::constant(encode_level(D, level));
  }

  Coordinates Cascade::apply(std::size_t a, Coordinates const& v) const {
    if (v.size() != levels()) {
      throw DomainError("coordinate vector has " + std::to_string(v.size())
                        + " entries, expected " + std::to_string(levels()));
    }
    Coordinates out(v.size());
    std::span<Coordinate const> const in(v);
    for (std::size_t i = 1; i <= v.size(); ++i) {
      out[i - 1] = dependency(a, i, in.first(i - 1)).apply(v[i - 1]);
    }
    return out;
  }

  Coordinates Cascade::apply_word(Word const& w, Coordinates v) const {
    for (std::size_t a : w) {
      v = apply(a, v);
    }
    return v;
  }

  void Cascade::override_dependency(std::size_t                 a,
                                    std::size_t                 level,
                                    std::span<Coordinate const> prefix,
                                    ComponentElement            value) {
    std::unique_lock lock(memo_->mutex);
    memo_->overrides.insert_or_assign(memo_key(a, level, prefix), std::move(value));
  }

  CascadeTransformation encode_lift(Cascade const& c, LiftedGenerator const& lift) {
    return CascadeTransformation(c, lift.generator());
  }

  Coordinates apply(CascadeTransformation const& ct, Coordinates const& v) {
    return ct(v);
  }

  Decomposition::Decomposition(GeneratorSet gens, std::size_t budget)
      : skeleton_(std::move(gens)),
        holonomy_(skeleton_, budget),
        cascade_(skeleton_, holonomy_) {}

}  // namespace holonomy
