#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gg {

using Point = std::uint32_t;

class Error : public std::exception {
public:
  explicit Error(std::string msg) : msg_(std::move(msg)) {}
  const char *what() const noexcept override { return msg_.c_str(); }

private:
  std::string msg_;
};

/// A permutation of {0,...,degree-1}, stored as its image vector.
///
/// Points act on the right: the image of i under p is p[i], and
/// compose(p,q) maps i to q(p(i)) (apply p first, then q).  Under this
/// convention conjugation is t^g = g^-1 * t * g.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(Point degree);               // identity
  explicit Permutation(std::vector<Point> images);  // checked bijection

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  /// Sorted cycle-length multiset, fixed points included.
  std::vector<Point> cycle_type() const;
  std::vector<std::vector<Point>> cycles(bool with_fixed = false) const;

  /// Power p^e (e may be negative).
  Permutation power(std::int64_t e) const;

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return !(*this == o); }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)"; "()" for identity.
  std::string to_cycle_string() const;
  static Permutation from_cycle_string(const std::string &s, Point degree);

private:
  std::vector<Point> images_;
};

Permutation compose(const Permutation &p, const Permutation &q);
/// g^-1 * t * g under the left-to-right convention.
Permutation conjugate(const Permutation &t, const Permutation &g);
/// Commutator [p,q] = p^-1 q^-1 p q.
Permutation commutator(const Permutation &p, const Permutation &q);
bool commute(const Permutation &p, const Permutation &q);

}  // namespace gg
