#pragma once

// Subsets of N as bitmasks: t-switchability, connectivity, the t-signed
// classification, switchable closures and exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permideal/hyperlattice.hpp"

namespace permideal {

/// Bit k is the point of index k. Shapes are limited to 64 points.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kDefaultCapPoints = 16;

inline bool has(PointSet s, std::size_t k) { return (s >> k) & 1u; }
inline PointSet bit(std::size_t k) { return PointSet{1} << k; }

/// Per-shape lookup tables shared by all set computations.
class LatticeTables {
 public:
  struct Requirement {
    PointSet pair;    // {a, b} with d(a,b) = 2
    PointSet needed;  // {s(i,a,b), s(i,b,a)}
    std::size_t a, b;
    int axis;
  };

  explicit LatticeTables(Shape shape);

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  PointSet full() const { return full_; }
  PointSet neighbors(std::size_t k) const { return neighbors_[k]; }
  int dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  const std::vector<Requirement>& requirements() const { return requirements_; }
  /// 2x3 grids varying on axes {i,j} with {i,j} meeting [t].
  const std::vector<PointSet>& obstructions() const { return obstructions_; }

  PointSet mask_of(const std::vector<Point>& points) const;
  std::vector<Point> points_of(PointSet s) const;
  std::vector<std::size_t> indices_of(PointSet s) const;

 private:
  Shape shape_;
  PointSet full_ = 0;
  std::vector<PointSet> neighbors_;
  std::vector<int> dist_;
  std::vector<Requirement> requirements_;
  std::vector<PointSet> obstructions_;
};

struct SwitchViolation {
  Point a, b;
  int axis;
};

std::optional<SwitchViolation> switchability_violation(const LatticeTables& tb, PointSet s);
bool is_t_switchable(const LatticeTables& tb, PointSet s);
/// Smallest t-switchable superset.
PointSet switchable_closure(const LatticeTables& tb, PointSet u);

/// Components of the distance-1 graph on s, ordered by smallest member.
std::vector<PointSet> components(const LatticeTables& tb, PointSet s);
/// Breadth-first distances from src inside s; -1 when unreachable.
std::vector<int> bfs_distances(const LatticeTables& tb, PointSet s, std::size_t src);
/// pl_S(a,b). Throws NotConnected.
int path_length(const LatticeTables& tb, PointSet s, std::size_t a, std::size_t b);
int path_length(const LatticeTables& tb, PointSet s, const Point& a, const Point& b);

enum class ComponentTag { CONST_HEAD, NEAR_SINGLETON, PARITY_CONSISTENT, NOT_SIGNED };
const char* to_string(ComponentTag tag);

struct ComponentClass {
  PointSet members = 0;
  ComponentTag tag = ComponentTag::NOT_SIGNED;
  /// For NOT_SIGNED: a closed walk of odd length, first point repeated at the end.
  std::vector<std::size_t> odd_walk;
};

struct SignedClassification {
  std::optional<SwitchViolation> violation;
  std::vector<ComponentClass> components;
  bool is_t_signed() const;
  /// Human-readable reason when not t-signed.
  std::string witness(const Shape& shape) const;
};

SignedClassification classify_signed(const LatticeTables& tb, PointSet s);
bool is_t_signed(const LatticeTables& tb, PointSet s);

/// Closure criterion: U lies in a t-signed set iff its switchable closure
/// contains no 2x3 obstruction.
bool is_subset_of_signed(const LatticeTables& tb, PointSet u);
/// Direct search against an enumerated list of t-signed sets.
bool is_subset_of_signed_direct(PointSet u, const std::vector<PointSet>& signed_sets);

/// Every t-signed subset of N (including the empty set), sorted ascending by
/// mask. Throws CapExceeded when |N| > cap_points.
std::vector<PointSet> enumerate_t_signed(const LatticeTables& tb, std::size_t cap_points = kDefaultCapPoints,
                                         unsigned threads = 1);
/// Sets in the list not strictly contained in another member.
std::vector<PointSet> set_maximal(const std::vector<PointSet>& sets);

std::string format_set(const LatticeTables& tb, PointSet s);

}  // namespace permideal
