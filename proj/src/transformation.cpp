#include "holonomy/transformation.hpp"

#include <algorithm>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

  Transformation::Transformation(std::vector<Point> images)
      : images_(std::move(images)) {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] >= images_.size()) {
        throw DomainError("image " + std::to_string(images_[i] + 1)
                          + " of point " + std::to_string(i + 1)
                          + " lies outside [1.."
                          + std::to_string(images_.size()) + "]");
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return Transformation(std::move(img));
  }

  Transformation Transformation::from_one_based(std::span<int const> images) {
    std::vector<Point> img;
    img.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      int const j = images[i];
      if (j < 1 || static_cast<std::size_t>(j) > images.size()) {
        throw DomainError("image " + std::to_string(j) + " of point "
                          + std::to_string(i + 1) + " lies outside [1.."
                          + std::to_string(images.size()) + "]");
      }
      img.push_back(static_cast<Point>(j - 1));
    }
    return Transformation(std::move(img));
  }

  Transformation Transformation::from_one_based(
      std::initializer_list<int> images) {
    return from_one_based(std::span<int const>(images.begin(), images.size()));
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_permutation() const {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (seen[p]) {
        return false;
      }
      seen[p] = true;
    }
    return true;
  }

  std::vector<int> Transformation::to_one_based() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (Point p : images_) {
      out.push_back(static_cast<int>(p) + 1);
    }
    return out;
  }

  std::string Transformation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(images_[i] + 1);
    }
    return out + "]";
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw DomainError("cannot compose transformations of degree "
                        + std::to_string(f.degree()) + " and "
                        + std::to_string(g.degree()));
    }
    std::vector<Point> img(f.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = g[f[i]];
    }
    return Transformation(std::move(img));
  }

  StateSubset StateSubset::full(std::size_t degree) {
    if (degree == 0 || degree > kMaxDegree) {
      throw DomainError("state sets must have between 1 and 64 points, got "
                        + std::to_string(degree));
    }
    return StateSubset(degree == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << degree) - 1);
  }

  StateSubset StateSubset::singleton(Point p) {
    if (p >= kMaxDegree) {
      throw DomainError("point " + std::to_string(p + 1) + " out of range");
    }
    return StateSubset(std::uint64_t{1} << p);
  }

  StateSubset StateSubset::of(std::initializer_list<Point> zero_based) {
    StateSubset s;
    for (Point p : zero_based) {
      s = s | singleton(p);
    }
    return s;
  }

  StateSubset StateSubset::from_one_based(std::span<int const> points) {
    StateSubset s;
    for (int p : points) {
      if (p < 1 || static_cast<std::size_t>(p) > kMaxDegree) {
        throw DomainError("point " + std::to_string(p) + " out of range");
      }
      s = s | singleton(static_cast<Point>(p - 1));
    }
    return s;
  }

  StateSubset StateSubset::from_one_based(std::initializer_list<int> points) {
    return from_one_based(std::span<int const>(points.begin(), points.size()));
  }

  std::vector<Point> StateSubset::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Point>(std::countr_zero(b)));
    }
    return out;
  }

  std::vector<int> StateSubset::to_one_based() const {
    std::vector<int> out;
    for (Point p : points()) {
      out.push_back(static_cast<int>(p) + 1);
    }
    return out;
  }

  std::string StateSubset::to_string() const {
    std::string out = "{";
    bool        first_point = true;
    for (Point p : points()) {
      if (!first_point) {
        out += ',';
      }
      first_point = false;
      out += std::to_string(p + 1);
    }
    return out + "}";
  }

  bool total_order_less(StateSubset a, StateSubset b) noexcept {
    if (a.size() != b.size()) {
      return a.size() > b.size();
    }
    std::uint64_t const diff = a.bits() ^ b.bits();
    if (diff == 0) {
      return false;
    }
    // Both sorted lists agree below the lowest differing point; whichever
    // set holds that point has the smaller entry there.
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }

  StateSubset act_set(StateSubset P, Transformation const& s) {
    if (s.degree() < kMaxDegree && (P.bits() >> s.degree()) != 0) {
      throw DomainError("subset " + P.to_string()
                        + " has points beyond degree "
                        + std::to_string(s.degree()));
    }
    std::uint64_t out = 0;
    for (std::uint64_t b = P.bits(); b != 0; b &= b - 1) {
      out |= std::uint64_t{1} << s[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return StateSubset(out);
  }

  Word concat(Word const& u, Word const& v) {
    Word w(u);
    w.insert(w.end(), v.begin(), v.end());
    return w;
  }

  GeneratorSet::GeneratorSet(std::vector<Transformation> generators,
                             std::vector<std::string>    names)
      : generators_(std::move(generators)), names_(std::move(names)) {
    if (generators_.empty()) {
      throw DomainError("a generating set needs at least one transformation");
    }
    degree_ = generators_.front().degree();
    if (degree_ == 0 || degree_ > kMaxDegree) {
      throw DomainError("degree must lie in [1..64], got "
                        + std::to_string(degree_));
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].degree() != degree_) {
        throw DomainError("generator " + std::to_string(i + 1) + " has degree "
                          + std::to_string(generators_[i].degree())
                          + ", expected " + std::to_string(degree_));
      }
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        names_.push_back("s" + std::to_string(i + 1));
      }
    } else if (names_.size() != generators_.size()) {
      throw DomainError("got " + std::to_string(names_.size())
                        + " generator names for "
                        + std::to_string(generators_.size()) + " generators");
    }
  }

  Transformation GeneratorSet::evaluate(Word const& w) const {
    std::vector<Point> img(degree_);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t letter : w) {
      if (letter >= generators_.size()) {
        throw DomainError("letter " + std::to_string(letter + 1)
                          + " is not a generator index (have "
                          + std::to_string(generators_.size()) + ")");
      }
      Transformation const& g = generators_[letter];
      for (Point& p : img) {
        p = g[p];
      }
    }
    return Transformation(std::move(img));
  }

  std::string GeneratorSet::format(Word const& w) const {
    if (w.empty()) {
      return "id";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += w[i] < names_.size() ? names_[w[i]] : "?";
    }
    return out;
  }

  Transformation evaluate(Word const& w, GeneratorSet const& gens) {
    return gens.evaluate(w);
  }

}  // namespace holonomy

std::size_t std::hash<holonomy::Transformation>::operator()(
    holonomy::Transformation const& t) const noexcept {
  // FNV-1a over the image list.
  std::size_t h = 1469598103934665603ULL;
  for (holonomy::Point p : t.images()) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return h;
}
