#pragma once

// The cube-splitting partition: vertical equivalence classes stored
// compactly (tau, positions, values), and the forward/reverse mappings
// between grid cells and induced binary cubes.

#include <cstdint>
#include <optional>
#include <vector>

#include "monorec/grid.hpp"

namespace monorec {

// A vertex of the induced binary cube E^k, packed into a word: bit j of
// `word` is beta_{j+1}.
struct BitVertex {
  std::uint64_t word = 0;
  int k = 0;

  int weight() const { return __builtin_popcountll(word); }
  bool bit(int j) const { return (word >> j) & 1; }

  friend bool operator==(const BitVertex&, const BitVertex&) = default;
};

// A vertical equivalence class, identified by its anchor-side homogeneous
// vertex `rep`. Only the coordinates differing from m/2 are kept:
// `positions` holds their 1-based indexes s_1 < ... < s_tau and `values`
// the rep's values there; every other coordinate equals m/2 over the whole
// cell (possible only for even m). The cell has 2^tau members, obtained
// from rep by complementing (w.r.t. m) any subset of the listed positions.
//
// For both anchors, bit j = 1 keeps the rep's value at s_j and bit j = 0
// complements it, so the rep always encodes to (1,...,1). Upper- and
// Lower-anchored encodings of the same point are bitwise complements.
class CubeCell {
 public:
  Anchor anchor() const noexcept { return anchor_; }
  const GridPoint& rep() const noexcept { return rep_; }
  const std::vector<int>& positions() const noexcept { return positions_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int tau() const noexcept { return static_cast<int>(positions_.size()); }
  int n() const noexcept { return static_cast<int>(rep_.size()); }
  int m() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return 1ull << tau(); }

  bool contains(const GridPoint& a) const;

  // The cell's unique vertex in the upper / lower homogeneous area.
  GridPoint upper_vertex() const;
  GridPoint lower_vertex() const;

 private:
  friend CubeCell cell_of(const GridPoint&, const GridParams&, Anchor);

  CubeCell(Anchor anchor, GridPoint rep, std::vector<int> positions,
           std::vector<int> values, int m)
      : rep_(std::move(rep)),
        positions_(std::move(positions)),
        values_(std::move(values)),
        m_(m),
        anchor_(anchor) {}

  GridPoint rep_;
  std::vector<int> positions_;
  std::vector<int> values_;
  int m_;
  Anchor anchor_;
};

// Builds the compact cell for a homogeneous vertex; does not materialize
// the 2^tau members. `rep` must lie in the homogeneous area matching the
// anchor.
CubeCell cell_of(const GridPoint& rep, const GridParams& p, Anchor anchor);

// All 2^tau members, ordered by their bit encoding's numeric value.
std::vector<GridPoint> enumerate_cell(const CubeCell& c);

// Encode a cell member: bit j is 1 iff the member's coordinate at s_j lies
// on the anchor's side of m/2 (> m/2 for Upper, < m/2 for Lower).
BitVertex to_cube(const GridPoint& a, const CubeCell& c);

// Exact inverse of to_cube: bit 1 keeps the rep's value at s_j, bit 0 takes
// m - value; coordinates off `positions` are m/2.
GridPoint from_cube(const BitVertex& b, const CubeCell& c);

// Lazily yields cells in ascending lexicographic rep order.
class CellStream {
 public:
  std::optional<CubeCell> next();

 private:
  friend CellStream full_partition(const GridParams&, Anchor);
  friend CellStream partial_partition(std::vector<GridPoint>,
                                      const GridParams&, Anchor);

  CellStream(GridParams p, Anchor anchor)
      : p_(p), anchor_(anchor), full_(true) {}
  CellStream(GridParams p, Anchor anchor, std::vector<GridPoint> reps)
      : p_(p), anchor_(anchor), full_(false), reps_(std::move(reps)) {}

  GridParams p_;
  Anchor anchor_;
  bool full_;
  std::vector<int> odometer_;  // empty until first next()
  bool done_ = false;
  std::vector<GridPoint> reps_;  // sorted, deduplicated (partial mode)
  std::size_t next_rep_ = 0;
};

// One cell per homogeneous vertex; cells are pairwise disjoint and their
// sizes sum to (m+1)^n.
CellStream full_partition(const GridParams& p, Anchor anchor);

// Cells for the given representatives only (each must be homogeneous for
// the anchor); duplicates are collapsed.
CellStream partial_partition(std::vector<GridPoint> reps, const GridParams& p,
                             Anchor anchor);

std::vector<CubeCell> collect_cells(CellStream stream);

// hist[k] = number of cells with tau == k in the full partition.
std::vector<std::uint64_t> tau_histogram(const GridParams& p);

}  // namespace monorec
