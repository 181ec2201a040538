#pragma once

// Monotone oracle implementations and generators, plus the brute-force
// recognizer used as ground truth.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monorec/grid.hpp"
#include "monorec/result.hpp"

namespace monorec {

using QueryFn = std::function<int(const GridPoint&)>;

inline constexpr std::uint64_t kDefaultBruteBudget = 1ull << 22;

// Counting, memoizing wrapper around a membership-query callback. Repeated
// queries on the same point hit the cache and do not increment the count.
// Safe for concurrent queries (required by parallel per-cell recognition);
// the wrapped callback must be a pure function of the point.
class OracleHandle {
 public:
  explicit OracleHandle(QueryFn fn) : fn_(std::move(fn)) {}

  OracleHandle(const OracleHandle&) = delete;
  OracleHandle& operator=(const OracleHandle&) = delete;

  int query(const GridPoint& a);
  std::uint64_t count() const;

  // Snapshot of every answered point, ascending lexicographic.
  std::vector<std::pair<GridPoint, int>> answers() const;

 private:
  QueryFn fn_;
  mutable std::mutex mu_;
  std::map<GridPoint, int> cache_;
  std::uint64_t count_ = 0;
};

// The upset of an antichain of lower units. Construction minimizes the
// given points, so any generating set is accepted.
class ExplicitMonotone {
 public:
  ExplicitMonotone(const GridParams& p, std::vector<GridPoint> units);

  int operator()(const GridPoint& a) const;
  const std::vector<GridPoint>& lower_units() const noexcept {
    return units_;
  }

 private:
  std::vector<GridPoint> units_;
};

// Exact fraction; denominators stay positive, always reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  static Rational parse(const std::string& text);  // "3", "-1/2", "0.25"
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// F(a) = 1 iff sum w_i * a_i >= theta, with nonnegative rational weights
// (which guarantees monotonicity). Comparisons are exact.
class ThresholdOracle {
 public:
  ThresholdOracle(const GridParams& p, std::vector<Rational> weights,
                  Rational theta);

  int operator()(const GridPoint& a) const;
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& theta() const noexcept { return theta_; }

 private:
  std::vector<Rational> weights_;
  Rational theta_;
};

// Forces zeros on a down-set region and defers to an inner monotone oracle
// elsewhere, so the composite stays monotone:
//   VolumeCap(r):  F(a) = 0 whenever sum a_i <= r
//   PerItemCap(r_1..r_n): F(a) = 0 whenever a_i <= r_i for all i
class BasketConstraintOracle {
 public:
  static BasketConstraintOracle volume_cap(const GridParams& p, long long r,
                                           QueryFn inner);
  static BasketConstraintOracle per_item_cap(const GridParams& p,
                                             std::vector<int> caps,
                                             QueryFn inner);

  int operator()(const GridPoint& a) const;
  bool forced_zero(const GridPoint& a) const;

 private:
  BasketConstraintOracle(std::optional<long long> volume,
                         std::vector<int> caps, QueryFn inner)
      : volume_(volume), caps_(std::move(caps)), inner_(std::move(inner)) {}

  std::optional<long long> volume_;
  std::vector<int> caps_;  // empty unless PerItemCap
  QueryFn inner_;
};

// Reproducible random monotone function: samples candidate points near a
// density-controlled layer and keeps the undominated ones. density 0 is the
// identically-0 function; density >= 1 is identically-1. Higher density
// biases the expected number of units upward (documented, not calibrated).
ExplicitMonotone random_monotone(const GridParams& p, double density,
                                 std::uint64_t seed);

// Ground truth: evaluates all (m+1)^n points through the handle and
// extracts the antichains. query_count of the result is exactly (m+1)^n
// when the handle is fresh.
RecognitionResult brute_force_recognize(const GridParams& p,
                                        OracleHandle& oracle,
                                        std::uint64_t budget = kDefaultBruteBudget);

// Checks every covering pair (which suffices by transitivity); returns
// nullopt if monotone, otherwise a witnessing pair (u, z) with u <= z,
// F(u)=1, F(z)=0.
std::optional<std::pair<GridPoint, GridPoint>> check_monotone(
    const GridParams& p, const QueryFn& f,
    std::uint64_t budget = kDefaultBruteBudget);

}  // namespace monorec
