#include "monorec/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace monorec {

std::vector<GridPoint> minimal_elements(std::vector<GridPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && leq(pts[j], pts[i]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

std::vector<GridPoint> maximal_elements(std::vector<GridPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && leq(pts[i], pts[j]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

bool in_upset(const GridPoint& a, const std::vector<GridPoint>& units) {
  for (const auto& u : units)
    if (leq(u, a)) return true;
  return false;
}

bool in_downset(const GridPoint& a, const std::vector<GridPoint>& zeros) {
  for (const auto& z : zeros)
    if (leq(a, z)) return true;
  return false;
}

int OracleHandle::query(const GridPoint& a) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
  }
  const int v = fn_(a) ? 1 : 0;
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(a, v);
  if (inserted) ++count_;
  return it->second;
}

std::uint64_t OracleHandle::count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return count_;
}

std::vector<std::pair<GridPoint, int>> OracleHandle::answers() const {
  std::lock_guard<std::mutex> lock(mu_);
  return {cache_.begin(), cache_.end()};
}

ExplicitMonotone::ExplicitMonotone(const GridParams& p,
                                   std::vector<GridPoint> units) {
  for (const auto& u : units) validate_point(u, p);
  units_ = minimal_elements(std::move(units));
}

int ExplicitMonotone::operator()(const GridPoint& a) const {
  return in_upset(a, units_) ? 1 : 0;
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 checked_mul128(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapacityError("rational arithmetic overflows 128 bits");
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw InvalidInputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw InvalidInputError("empty rational");
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)),
                      std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 18)
        throw InvalidInputError("bad decimal: " + text);
      long long den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      long long whole = std::stoll(text.substr(0, dot));
      const bool neg = text[0] == '-';
      long long部分 = 0;
      (void)部分;
      long long fpart = std::stoll(frac);
      long long num = whole * den + (neg ? -fpart : fpart);
      return Rational(num, den);
    }
    return Rational(std::stoll(text), 1);
  } catch (const std::invalid_argument&) {
    throw InvalidInputError("cannot parse rational: " + text);
  } catch (const std::out_of_range&) {
    throw InvalidInputError("rational out of range: " + text);
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

ThresholdOracle::ThresholdOracle(const GridParams& p,
                                 std::vector<Rational> weights, Rational theta)
    : weights_(std::move(weights)), theta_(theta) {
  p.validate();
  if (weights_.size() != static_cast<std::size_t>(p.n))
    throw InvalidInputError("threshold oracle needs n weights");
  for (const auto& w : weights_)
    if (w.num < 0)
      throw InvalidInputError("threshold weights must be nonnegative");
}

int ThresholdOracle::operator()(const GridPoint& a) const {
  // exact: accumulate sum w_i * a_i as a reduced fraction
  __int128 acc_n = 0, acc_d = 1;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const __int128 term_n = checked_mul128(weights_[i].num, a[i]);
    const __int128 term_d = weights_[i].den;
    acc_n = checked_mul128(acc_n, term_d);
    acc_n += checked_mul128(term_n, acc_d);
    acc_d = checked_mul128(acc_d, term_d);
    const auto g = gcd128(acc_n < 0 ? static_cast<unsigned __int128>(-acc_n)
                                    : static_cast<unsigned __int128>(acc_n),
                          static_cast<unsigned __int128>(acc_d));
    if (g > 1) {
      acc_n /= static_cast<__int128>(g);
      acc_d /= static_cast<__int128>(g);
    }
  }
  const __int128 lhs = checked_mul128(acc_n, theta_.den);
  const __int128 rhs = checked_mul128(static_cast<__int128>(theta_.num), acc_d);
  return lhs >= rhs ? 1 : 0;
}

BasketConstraintOracle BasketConstraintOracle::volume_cap(const GridParams& p,
                                                          long long r,
                                                          QueryFn inner) {
  p.validate();
  return BasketConstraintOracle(r, {}, std::move(inner));
}

BasketConstraintOracle BasketConstraintOracle::per_item_cap(
    const GridParams& p, std::vector<int> caps, QueryFn inner) {
  p.validate();
  if (caps.size() != static_cast<std::size_t>(p.n))
    throw InvalidInputError("per-item caps need n entries");
  return BasketConstraintOracle(std::nullopt, std::move(caps),
                                std::move(inner));
}

bool BasketConstraintOracle::forced_zero(const GridPoint& a) const {
  if (volume_) return layer_sum(a) <= *volume_;
  for (std::size_t i = 0; i < caps_.size(); ++i)
    if (a[i] > caps_[i]) return false;
  return true;
}

int BasketConstraintOracle::operator()(const GridPoint& a) const {
  if (forced_zero(a)) return 0;
  return inner_(a) ? 1 : 0;
}

ExplicitMonotone random_monotone(const GridParams& p, double density,
                                 std::uint64_t seed) {
  p.validate();
  if (density <= 0.0) return ExplicitMonotone(p, {});
  if (density >= 1.0)
    return ExplicitMonotone(
        p, {GridPoint(std::vector<int>(static_cast<std::size_t>(p.n), 0))});

  // mt19937_64 with modulo draws: identical sequences on every platform
  std::mt19937_64 rng(seed);
  const long long top = static_cast<long long>(p.m) * p.n;
  const long long target =
      std::min(top, std::max(0ll, static_cast<long long>(
                                      (1.0 - density) * top + 0.5)));
  const int candidates = 1 + static_cast<int>(density * 2 * p.n);

  std::vector<GridPoint> cands;
  for (int c = 0; c < candidates; ++c) {
    const long long jitter =
        static_cast<long long>(rng() % (2ull * p.n + 1)) - p.n;
    const long long s = std::min(top, std::max(0ll, target + jitter));
    std::vector<int> coords(static_cast<std::size_t>(p.n), 0);
    for (long long step = 0; step < s; ++step) {
      std::vector<int> open;
      for (int i = 0; i < p.n; ++i)
        if (coords[static_cast<std::size_t>(i)] < p.m) open.push_back(i);
      const int pick = open[static_cast<std::size_t>(rng() % open.size())];
      ++coords[static_cast<std::size_t>(pick)];
    }
    cands.emplace_back(std::move(coords));
  }
  return ExplicitMonotone(p, std::move(cands));
}

RecognitionResult brute_force_recognize(const GridParams& p,
                                        OracleHandle& oracle,
                                        std::uint64_t budget) {
  const std::uint64_t total = p.point_count();
  if (total > budget)
    throw CapacityError("grid has " + std::to_string(total) +
                        " points, over the enumeration budget " +
                        std::to_string(budget));

  std::vector<std::uint8_t> values;
  values.reserve(static_cast<std::size_t>(total));
  for_each_point(p, [&](const GridPoint& a) {
    values.push_back(static_cast<std::uint8_t>(oracle.query(a)));
  });

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(p.n), 1);
  for (int i = p.n - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] *
        (static_cast<std::uint64_t>(p.m) + 1);

  RecognitionResult res;
  res.algorithm_tag = "brute";
  std::uint64_t rank = 0;
  for_each_point(p, [&](const GridPoint& a) {
    if (values[rank]) {
      bool minimal = true;
      for (int i = 0; i < p.n && minimal; ++i)
        if (a[static_cast<std::size_t>(i)] > 0)
          minimal = !values[rank - stride[static_cast<std::size_t>(i)]];
      if (minimal) res.lower_units.push_back(a);
    } else {
      bool maximal = true;
      for (int i = 0; i < p.n && maximal; ++i)
        if (a[static_cast<std::size_t>(i)] < p.m)
          maximal = values[rank + stride[static_cast<std::size_t>(i)]] != 0;
      if (maximal) res.upper_zeros.push_back(a);
    }
    ++rank;
  });
  res.query_count = oracle.count();
  return res;
}

std::optional<std::pair<GridPoint, GridPoint>> check_monotone(
    const GridParams& p, const QueryFn& f, std::uint64_t budget) {
  const std::uint64_t total = p.point_count();
  if (total > budget)
    throw CapacityError("grid has " + std::to_string(total) +
                        " points, over the enumeration budget " +
                        std::to_string(budget));

  std::vector<std::uint8_t> values;
  values.reserve(static_cast<std::size_t>(total));
  for_each_point(p, [&](const GridPoint& a) {
    values.push_back(f(a) ? 1 : 0);
  });

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(p.n), 1);
  for (int i = p.n - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] *
        (static_cast<std::uint64_t>(p.m) + 1);

  std::optional<std::pair<GridPoint, GridPoint>> witness;
  std::uint64_t rank = 0;
  for_each_point(p, [&](const GridPoint& a) {
    if (!witness && values[rank]) {
      for (int i = 0; i < p.n; ++i) {
        if (a[static_cast<std::size_t>(i)] < p.m &&
            !values[rank + stride[static_cast<std::size_t>(i)]]) {
          std::vector<int> up = a.coords();
          ++up[static_cast<std::size_t>(i)];
          witness = {a, GridPoint(std::move(up))};
          break;
        }
      }
    }
    ++rank;
  });
  return witness;
}

}  // namespace monorec
