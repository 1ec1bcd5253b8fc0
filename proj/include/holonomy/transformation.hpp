#pragma once

// Finite transformations, subsets of the state set, and words over a fixed
// generating set. Points are 0-based internally; the 1-based notation used
// in input documents and reports is converted at the I/O boundary only.
//
// The action is on the right and composition is left-to-right throughout:
// x.(f g) = (x.f).g, so compose(f, g) means "f, then g".

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace holonomy {

  using Point = std::uint32_t;

  // Largest state set supported; subsets are stored as 64-bit masks.
  inline constexpr std::size_t kMaxDegree = 64;

  class Transformation {
   public:
    Transformation() = default;

    // Images are 0-based; throws DomainError if any image is out of range.
    explicit Transformation(std::vector<Point> images);

    static Transformation identity(std::size_t degree);
    // Builds from the 1-based image list [j_1, ..., j_n].
    static Transformation from_one_based(std::span<int const> images);
    static Transformation from_one_based(std::initializer_list<int> images);

    [[nodiscard]] std::size_t degree() const noexcept {
      return images_.size();
    }
    [[nodiscard]] Point operator[](std::size_t i) const noexcept {
      return images_[i];
    }
    [[nodiscard]] std::vector<Point> const& images() const noexcept {
      return images_;
    }
    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] bool is_permutation() const;
    [[nodiscard]] std::vector<int> to_one_based() const;
    // "[2,1,3]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<Point> images_;
  };

  // f then g. Throws DomainError on degree mismatch.
  [[nodiscard]] Transformation compose(Transformation const& f,
                                       Transformation const& g);

  // A subset of a state set of at most kMaxDegree points.
  class StateSubset {
   public:
    constexpr StateSubset() = default;
    constexpr explicit StateSubset(std::uint64_t bits) : bits_(bits) {}

    static StateSubset full(std::size_t degree);
    static StateSubset singleton(Point p);
    static StateSubset of(std::initializer_list<Point> zero_based);
    static StateSubset from_one_based(std::span<int const> points);
    static StateSubset from_one_based(std::initializer_list<int> points);

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
      return bits_;
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    [[nodiscard]] constexpr bool is_singleton() const noexcept {
      return std::has_single_bit(bits_);
    }
    [[nodiscard]] constexpr bool contains(Point p) const noexcept {
      return (bits_ >> p) & 1U;
    }
    [[nodiscard]] constexpr bool subset_of(StateSubset other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] constexpr bool proper_subset_of(
        StateSubset other) const noexcept {
      return subset_of(other) && bits_ != other.bits_;
    }
    // Smallest member; undefined on the empty set.
    [[nodiscard]] constexpr Point first() const noexcept {
      return static_cast<Point>(std::countr_zero(bits_));
    }
    [[nodiscard]] std::vector<Point> points() const;
    [[nodiscard]] std::vector<int>   to_one_based() const;
    // "{1,2}" in 1-based notation.
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(StateSubset, StateSubset) = default;

    constexpr StateSubset operator|(StateSubset o) const noexcept {
      return StateSubset(bits_ | o.bits_);
    }

   private:
    std::uint64_t bits_ = 0;
  };

  // Descending cardinality, then ascending lexicographic order on the sorted
  // point lists. Every deterministic choice in the decomposition uses it.
  [[nodiscard]] bool total_order_less(StateSubset a, StateSubset b) noexcept;

  // P.s = {p.s : p in P}. Throws DomainError if P has points beyond the
  // degree of s.
  [[nodiscard]] StateSubset act_set(StateSubset P, Transformation const& s);

  // Letters are 0-based generator indices; the empty word is the identity of
  // S^1.
  using Word = std::vector<std::size_t>;

  [[nodiscard]] Word concat(Word const& u, Word const& v);

  // A fixed generating set, optionally named. Names default to s1, s2, ...
  class GeneratorSet {
   public:
    GeneratorSet() = default;
    // Throws DomainError on an empty list, mixed degrees, or degree > 64.
    explicit GeneratorSet(std::vector<Transformation> generators,
                          std::vector<std::string>    names = {});

    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return generators_.size();
    }
    [[nodiscard]] Transformation const& operator[](std::size_t i) const {
      return generators_[i];
    }
    [[nodiscard]] std::vector<Transformation> const& generators()
        const noexcept {
      return generators_;
    }
    [[nodiscard]] std::string const& name(std::size_t i) const {
      return names_[i];
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    // Left-to-right product of the named generators; the empty word gives
    // the identity map. Throws DomainError on an out-of-range letter.
    [[nodiscard]] Transformation evaluate(Word const& w) const;
    // Generator names separated by spaces; the empty word prints as "id".
    [[nodiscard]] std::string format(Word const& w) const;

   private:
    std::size_t                 degree_ = 0;
    std::vector<Transformation> generators_;
    std::vector<std::string>    names_;
  };

  [[nodiscard]] Transformation evaluate(Word const&         w,
                                        GeneratorSet const& gens);

}  // namespace holonomy

template <>
struct std::hash<holonomy::Transformation> {
  std::size_t operator()(holonomy::Transformation const& t) const noexcept;
};
