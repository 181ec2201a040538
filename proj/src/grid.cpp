#include "monorec/grid.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace monorec {

std::string to_string(const GridPoint& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GridPoint& a) {
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os << ')';
}

void validate_point(const GridPoint& a, const GridParams& p) {
  p.validate();
  if (a.size() != static_cast<std::size_t>(p.n))
    throw InvalidInputError("point has " + std::to_string(a.size()) +
                            " coordinates, grid has n=" + std::to_string(p.n));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] > p.m)
      throw InvalidInputError("coordinate " + std::to_string(i + 1) + " of " +
                              to_string(a) + " outside 0.." +
                              std::to_string(p.m));
}

bool leq(const GridPoint& a, const GridPoint& b) {
  if (a.size() != b.size())
    throw InvalidInputError("leq: dimension mismatch (" +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long long layer_sum(const GridPoint& a) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i];
  return s;
}

bool in_upper_area(const GridPoint& a, const GridParams& p) {
  validate_point(a, p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!coord_on_upper_side(a[i], p.m)) return false;
  return true;
}

bool in_lower_area(const GridPoint& a, const GridParams& p) {
  validate_point(a, p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!coord_on_lower_side(a[i], p.m)) return false;
  return true;
}

bool in_area(const GridPoint& a, const GridParams& p, Anchor anchor) {
  return anchor == Anchor::Upper ? in_upper_area(a, p) : in_lower_area(a, p);
}

std::uint64_t homogeneous_count(const GridParams& p) {
  p.validate();
  // values ceil(m/2)..m, i.e. m - ceil(m/2) + 1 choices per coordinate
  const std::uint64_t choices =
      static_cast<std::uint64_t>(p.m - (p.m + 1) / 2 + 1);
  return detail::checked_pow(choices, p.n);
}

static std::vector<GridPoint> materialize_area(const GridParams& p,
                                               Anchor anchor) {
  const std::uint64_t count = homogeneous_count(p);
  if (count > kMaterializeBudget)
    throw CapacityError("homogeneous area has " + std::to_string(count) +
                        " vertices, over the materialization budget");
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_homogeneous(p, anchor,
                       [&](const GridPoint& v) { out.push_back(v); });
  return out;
}

std::vector<GridPoint> upper_homogeneous(const GridParams& p) {
  return materialize_area(p, Anchor::Upper);
}

std::vector<GridPoint> lower_homogeneous(const GridParams& p) {
  return materialize_area(p, Anchor::Lower);
}

std::vector<std::uint64_t> layer_counts(const GridParams& p) {
  p.validate();
  const std::size_t top = static_cast<std::size_t>(p.m) * p.n;
  std::vector<std::uint64_t> dp(top + 1, 0);
  dp[0] = 1;
  // one coordinate at a time; prefix sums give the 0..m window
  std::vector<std::uint64_t> pref(top + 2, 0);
  for (int d = 0; d < p.n; ++d) {
    pref[0] = 0;
    for (std::size_t s = 0; s <= top; ++s)
      pref[s + 1] = detail::checked_add(pref[s], dp[s]);
    for (std::size_t s = top + 1; s-- > 0;) {
      const std::size_t lo = s >= static_cast<std::size_t>(p.m) + 1
                                 ? s - p.m
                                 : 0;
      dp[s] = pref[s + 1] - pref[lo];
    }
  }
  return dp;
}

MiddleLayerStats middle_layer_stats(const GridParams& p) {
  const auto counts = layer_counts(p);
  const std::size_t mid =
      (static_cast<std::size_t>(p.m) * static_cast<std::size_t>(p.n)) / 2;
  const std::uint64_t m0 = counts[mid];
  const std::uint64_t n0 = mid + 1 < counts.size() ? counts[mid + 1] : 0;
  const std::uint64_t log2m =
      std::bit_width(static_cast<unsigned long long>(p.m)) - 1;
  return {m0, n0, detail::checked_add(m0, detail::checked_mul(log2m, n0))};
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  }
  if (acc > ~0ull) throw CapacityError("binomial overflows 64 bits");
  return static_cast<std::uint64_t>(acc);
}

}  // namespace monorec
