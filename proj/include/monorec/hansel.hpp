#pragma once

// Hansel chain decomposition of the binary cube E^k and chain-based
// recognition of a monotone Boolean function via membership queries.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "monorec/cube_split.hpp"
#include "monorec/errors.hpp"

namespace monorec {

// Hard cap on cube dimension (value arrays are 2^k entries).
inline constexpr int kMaxCubeDim = 22;

// A saturated symmetric chain: strictly increasing vertices, consecutive
// elements differing in exactly one bit. A chain starting at weight w has
// length k+1-2w and ends at weight k-w.
struct Chain {
  int k = 0;
  std::vector<std::uint64_t> words;

  std::size_t length() const { return words.size(); }
  int start_weight() const { return __builtin_popcountll(words.front()); }
};

// The classical recursive construction: every chain <a_1..a_l> of E^{k-1}
// yields <a_1.0, ..., a_l.0, a_l.1> and, when l > 1, <a_1.1, ..., a_{l-1}.1>.
// There are C(k, floor(k/2)) chains and they partition E^k; for k=0 a single
// one-vertex chain.
std::vector<Chain> hansel_chains(int k);

// C(k, floor(k/2)) + C(k, floor(k/2)+1): the worst-case number of queries
// needed to recognize a monotone Boolean function on E^k.
std::uint64_t hansel_query_bound(int k);

// Two comparable cube vertices with conflicting values:
// unit_vertex <= zero_vertex bitwise, yet f(unit)=1 and f(zero)=0.
class CubeContradictionError : public std::runtime_error {
 public:
  CubeContradictionError(std::uint64_t unit_vertex, std::uint64_t zero_vertex,
                         int k);

  std::uint64_t unit_vertex() const noexcept { return unit_vertex_; }
  std::uint64_t zero_vertex() const noexcept { return zero_vertex_; }
  int k() const noexcept { return k_; }

 private:
  std::uint64_t unit_vertex_;
  std::uint64_t zero_vertex_;
  int k_;
};

// Partial 0/1 assignment on E^k; -1 marks unknown.
class PartialAssignment {
 public:
  explicit PartialAssignment(int k);

  int k() const noexcept { return k_; }
  std::uint64_t vertex_count() const noexcept { return 1ull << k_; }
  int get(std::uint64_t v) const { return values_[v]; }
  void set(std::uint64_t v, int value);
  bool complete() const;

 private:
  int k_;
  std::vector<std::int8_t> values_;
};

// Extends `known` with every value forced by monotonicity: 1s propagate to
// supersets, 0s to subsets. Idempotent. Throws CubeContradictionError if the
// input admits no monotone extension.
PartialAssignment infer_closure(const PartialAssignment& known);

struct CubeAssignment {
  int k = 0;
  std::vector<std::uint8_t> values;          // all 2^k vertices
  std::vector<std::uint64_t> minimal_units;  // antichain, ascending words
  std::vector<std::uint64_t> maximal_zeros;  // antichain, ascending words
  std::vector<std::pair<std::uint64_t, int>> transcript;  // queries in order
};

using CubeQueryFn = std::function<int(BitVertex)>;

// Recognizes a monotone Boolean function on E^k with at most
// hansel_query_bound(k) callback invocations. Chains are processed in
// increasing length; within a chain the undetermined segment (contiguous, by
// monotonicity) is resolved by binary search. Never queries a vertex whose
// value is already inferable from previous answers.
CubeAssignment recognize_cube(int k, const CubeQueryFn& query);

}  // namespace monorec
