#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monorec/grid.hpp"

namespace monorec {

struct PerCellStat {
  GridPoint rep;
  int tau = 0;
  std::uint64_t queries = 0;  // induced-cube callback invocations
};

// Full identification of a monotone binary function: its lower units and
// upper zeros (both antichains, ascending lexicographic), plus query
// statistics. F(a) = 1 iff a dominates some lower unit.
struct RecognitionResult {
  std::vector<GridPoint> lower_units;
  std::vector<GridPoint> upper_zeros;
  std::uint64_t query_count = 0;
  std::vector<PerCellStat> per_cell_stats;
  std::string algorithm_tag;
};

// Antichain extraction by pairwise dominance filtering; results sorted
// lexicographically, duplicates removed.
std::vector<GridPoint> minimal_elements(std::vector<GridPoint> pts);
std::vector<GridPoint> maximal_elements(std::vector<GridPoint> pts);

// True iff a dominates some element of `units` (i.e. F(a)=1 for the upset).
bool in_upset(const GridPoint& a, const std::vector<GridPoint>& units);
// True iff a is dominated by some element of `zeros`.
bool in_downset(const GridPoint& a, const std::vector<GridPoint>& zeros);

}  // namespace monorec
