#pragma once

// Core types for the multi-valued grid: points, the componentwise partial
// order, layers, homogeneous areas and middle-layer bound computations.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "monorec/errors.hpp"

namespace monorec {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapacityError("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapacityError("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace detail

// Points are materialized (as vectors of cells, homogeneous areas, ...) only
// below this budget; larger requests raise CapacityError. Streaming
// enumeration (for_each_point) has no such limit.
inline constexpr std::uint64_t kMaterializeBudget = 1ull << 22;

struct GridParams {
  int n = 1;  // dimension count
  int m = 1;  // maximum coordinate value; coordinates range over 0..m

  void validate() const {
    if (n < 1 || m < 1)
      throw InvalidInputError("grid requires n >= 1 and m >= 1");
  }

  // (m+1)^n, checked.
  std::uint64_t point_count() const {
    validate();
    return detail::checked_pow(static_cast<std::uint64_t>(m) + 1, n);
  }

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

// A vertex of the grid: length-n coordinate vector with values in 0..m.
// Value type with total (lexicographic) ordering so it can key maps; the
// grid's componentwise partial order is `leq`, not operator<.
class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}

  const std::vector<int>& coords() const noexcept { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const GridPoint& a);
std::ostream& operator<<(std::ostream& os, const GridPoint& a);

void validate_point(const GridPoint& a, const GridParams& p);

// Componentwise partial order: every coordinate of a is <= the matching
// coordinate of b. Throws InvalidInputError on dimension mismatch.
bool leq(const GridPoint& a, const GridPoint& b);

long long layer_sum(const GridPoint& a);

// m/2 comparisons are exact (2*c vs m), never floating point, so odd m has
// no rounding ambiguity.
inline bool coord_on_upper_side(int c, int m) { return 2 * c >= m; }
inline bool coord_on_lower_side(int c, int m) { return 2 * c <= m; }

enum class Anchor { Upper, Lower };

bool in_upper_area(const GridPoint& a, const GridParams& p);
bool in_lower_area(const GridPoint& a, const GridParams& p);
bool in_area(const GridPoint& a, const GridParams& p, Anchor anchor);

// |H^| = |Hv|: ((m+1)/2)^n for odd m, (m/2+1)^n for even m.
std::uint64_t homogeneous_count(const GridParams& p);

// All vertices of the chosen homogeneous area in ascending lexicographic
// order (coordinate 1 compared first, smaller values first).
std::vector<GridPoint> upper_homogeneous(const GridParams& p);
std::vector<GridPoint> lower_homogeneous(const GridParams& p);

struct MiddleLayerStats {
  std::uint64_t m0;              // points on layer floor(m*n/2)
  std::uint64_t n0;              // points on layer floor(m*n/2)+1
  std::uint64_t alekseev_bound;  // m0 + floor(log2 m) * n0
};

MiddleLayerStats middle_layer_stats(const GridParams& p);

// Counts of points per layer sum, index 0..m*n.
std::vector<std::uint64_t> layer_counts(const GridParams& p);

// C(n, r) in 64 bits (n <= 64 is always safe here).
std::uint64_t binomial(int n, int r);

// Streaming enumeration of the whole grid in ascending lexicographic order.
template <class Fn>
void for_each_point(const GridParams& p, Fn&& fn) {
  p.validate();
  std::vector<int> c(static_cast<std::size_t>(p.n), 0);
  for (;;) {
    fn(GridPoint(c));
    int i = p.n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == p.m) {
      c[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
}

// Streaming enumeration of a homogeneous area, ascending lexicographic.
template <class Fn>
void for_each_homogeneous(const GridParams& p, Anchor anchor, Fn&& fn) {
  p.validate();
  const int lo = anchor == Anchor::Upper ? (p.m + 1) / 2 : 0;
  const int hi = anchor == Anchor::Upper ? p.m : p.m / 2;
  std::vector<int> c(static_cast<std::size_t>(p.n), lo);
  for (;;) {
    fn(GridPoint(c));
    int i = p.n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == hi) {
      c[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
}

}  // namespace monorec
