#include "monorec/hansel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monorec {

namespace {

std::string word_str(std::uint64_t w, int k) {
  std::string s(static_cast<std::size_t>(k), '0');
  for (int j = 0; j < k; ++j)
    if ((w >> j) & 1) s[static_cast<std::size_t>(j)] = '1';
  return "(" + s + ")";
}

void check_dim(int k) {
  if (k < 0) throw InvalidInputError("cube dimension must be >= 0");
  if (k > kMaxCubeDim)
    throw CapacityError("cube dimension " + std::to_string(k) + " over limit " +
                        std::to_string(kMaxCubeDim));
}

// Shared marking engine. val: -1 unknown, else 0/1. src[v] is the vertex
// whose asserted value forced v; it is always comparable with v, which is
// what makes contradiction witnesses honest.
struct MarkState {
  int k;
  std::vector<std::int8_t> val;
  std::vector<std::uint64_t> src;
  std::vector<std::uint64_t> stack;

  explicit MarkState(int kk)
      : k(kk), val(1ull << kk, -1), src(1ull << kk, 0) {}

  void assert_value(std::uint64_t v, int a) {
    if (val[v] == a) return;
    if (val[v] == 1 - a) {
      if (a == 1) throw CubeContradictionError(v, src[v], k);
      throw CubeContradictionError(src[v], v, k);
    }
    val[v] = static_cast<std::int8_t>(a);
    src[v] = v;
    stack.clear();
    stack.push_back(v);
    while (!stack.empty()) {
      const std::uint64_t u = stack.back();
      stack.pop_back();
      for (int j = 0; j < k; ++j) {
        const std::uint64_t bit = 1ull << j;
        const std::uint64_t w = a == 1 ? (u | bit) : (u & ~bit);
        if (w == u) continue;
        if (val[w] == -1) {
          val[w] = static_cast<std::int8_t>(a);
          src[w] = v;
          stack.push_back(w);
        } else if (val[w] != a) {
          // w sits between v and the conflicting source
          if (a == 1) throw CubeContradictionError(v, src[w], k);
          throw CubeContradictionError(src[w], v, k);
        }
      }
    }
  }
};

}  // namespace

CubeContradictionError::CubeContradictionError(std::uint64_t unit_vertex,
                                               std::uint64_t zero_vertex,
                                               int k)
    : std::runtime_error("monotonicity violated on the induced cube: f" +
                         word_str(unit_vertex, k) + "=1 but f" +
                         word_str(zero_vertex, k) + "=0 with " +
                         word_str(unit_vertex, k) +
                         " <= " + word_str(zero_vertex, k)),
      unit_vertex_(unit_vertex),
      zero_vertex_(zero_vertex),
      k_(k) {}

std::vector<Chain> hansel_chains(int k) {
  check_dim(k);
  std::vector<std::vector<std::uint64_t>> cur;
  cur.push_back({0});
  for (int d = 1; d <= k; ++d) {
    const std::uint64_t hi = 1ull << (d - 1);
    std::vector<std::vector<std::uint64_t>> next;
    next.reserve(2 * cur.size());
    for (auto& ch : cur) {
      std::vector<std::uint64_t> grown = ch;
      grown.push_back(ch.back() | hi);
      if (ch.size() > 1) {
        std::vector<std::uint64_t> lifted;
        lifted.reserve(ch.size() - 1);
        for (std::size_t i = 0; i + 1 < ch.size(); ++i)
          lifted.push_back(ch[i] | hi);
        next.push_back(std::move(grown));
        next.push_back(std::move(lifted));
      } else {
        next.push_back(std::move(grown));
      }
    }
    cur = std::move(next);
  }
  std::vector<Chain> out;
  out.reserve(cur.size());
  for (auto& words : cur) out.push_back(Chain{k, std::move(words)});
  return out;
}

std::uint64_t hansel_query_bound(int k) {
  check_dim(k);
  return detail::checked_add(binomial(k, k / 2), binomial(k, k / 2 + 1));
}

PartialAssignment::PartialAssignment(int k) : k_(k) {
  check_dim(k);
  values_.assign(1ull << k, -1);
}

void PartialAssignment::set(std::uint64_t v, int value) {
  if (v >= vertex_count())
    throw InvalidInputError("vertex index out of range");
  if (value != 0 && value != 1 && value != -1)
    throw InvalidInputError("assignment values must be 0, 1 or -1");
  values_[v] = static_cast<std::int8_t>(value);
}

bool PartialAssignment::complete() const {
  return std::find(values_.begin(), values_.end(), -1) == values_.end();
}

PartialAssignment infer_closure(const PartialAssignment& known) {
  MarkState st(known.k());
  for (std::uint64_t v = 0; v < known.vertex_count(); ++v)
    if (known.get(v) != -1) st.assert_value(v, known.get(v));
  PartialAssignment out(known.k());
  for (std::uint64_t v = 0; v < known.vertex_count(); ++v)
    out.set(v, st.val[v]);
  return out;
}

CubeAssignment recognize_cube(int k, const CubeQueryFn& query) {
  check_dim(k);
  auto chains = hansel_chains(k);
  std::vector<std::size_t> order(chains.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return chains[a].length() < chains[b].length();
                   });

  MarkState st(k);
  CubeAssignment out;
  out.k = k;
  for (const std::size_t ci : order) {
    const auto& words = chains[ci].words;
    for (;;) {
      // monotone values along a chain are a step function, so the unknown
      // indices form one contiguous segment
      std::ptrdiff_t lo = -1, hi = -1;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (st.val[words[i]] == -1) {
          if (lo < 0) lo = static_cast<std::ptrdiff_t>(i);
          hi = static_cast<std::ptrdiff_t>(i);
        }
      }
      if (lo < 0) break;
      for (std::ptrdiff_t i = lo; i <= hi; ++i)
        if (st.val[words[static_cast<std::size_t>(i)]] != -1)
          throw ConsistencyError("unknown segment not contiguous on a chain");
      const std::uint64_t q = words[static_cast<std::size_t>(lo + (hi - lo) / 2)];
      const int a = query(BitVertex{q, k}) ? 1 : 0;
      out.transcript.emplace_back(q, a);
      st.assert_value(q, a);
    }
  }

  out.values.resize(1ull << k);
  for (std::uint64_t v = 0; v < (1ull << k); ++v) {
    if (st.val[v] == -1)
      throw ConsistencyError("recognition left a vertex undetermined");
    out.values[v] = static_cast<std::uint8_t>(st.val[v]);
  }
  for (std::uint64_t v = 0; v < (1ull << k); ++v) {
    if (out.values[v]) {
      bool minimal = true;
      for (int j = 0; j < k && minimal; ++j)
        if ((v >> j) & 1) minimal = !out.values[v & ~(1ull << j)];
      if (minimal) out.minimal_units.push_back(v);
    } else {
      bool maximal = true;
      for (int j = 0; j < k && maximal; ++j)
        if (!((v >> j) & 1)) maximal = out.values[v | (1ull << j)] != 0;
      if (maximal) out.maximal_zeros.push_back(v);
    }
  }
  return out;
}

}  // namespace monorec
