#include "monorec/cube_split.hpp"

#include <algorithm>

namespace monorec {

bool CubeCell::contains(const GridPoint& a) const {
  if (a.size() != rep_.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (j < positions_.size() &&
        positions_[j] == static_cast<int>(i) + 1) {
      const int v = values_[j];
      if (a[i] != v && a[i] != m_ - v) return false;
      ++j;
    } else {
      if (2 * a[i] != m_) return false;
    }
  }
  return true;
}

GridPoint CubeCell::upper_vertex() const {
  std::vector<int> c = rep_.coords();
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    const std::size_t i = static_cast<std::size_t>(positions_[j]) - 1;
    if (2 * c[i] < m_) c[i] = m_ - c[i];
  }
  return GridPoint(std::move(c));
}

GridPoint CubeCell::lower_vertex() const {
  std::vector<int> c = rep_.coords();
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    const std::size_t i = static_cast<std::size_t>(positions_[j]) - 1;
    if (2 * c[i] > m_) c[i] = m_ - c[i];
  }
  return GridPoint(std::move(c));
}

CubeCell cell_of(const GridPoint& rep, const GridParams& p, Anchor anchor) {
  if (!in_area(rep, p, anchor))
    throw InvalidInputError(
        to_string(rep) + " is not in the " +
        (anchor == Anchor::Upper ? "upper" : "lower") + " homogeneous area");
  std::vector<int> positions;
  std::vector<int> values;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (2 * rep[i] != p.m) {
      positions.push_back(static_cast<int>(i) + 1);
      values.push_back(rep[i]);
    }
  }
  return CubeCell(anchor, rep, std::move(positions), std::move(values), p.m);
}

std::vector<GridPoint> enumerate_cell(const CubeCell& c) {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (std::uint64_t w = 0; w < c.size(); ++w)
    out.push_back(from_cube(BitVertex{w, c.tau()}, c));
  return out;
}

BitVertex to_cube(const GridPoint& a, const CubeCell& c) {
  if (!c.contains(a))
    throw InvalidInputError(to_string(a) + " is not a member of the cell of " +
                            to_string(c.rep()));
  std::uint64_t word = 0;
  const int m = c.m();
  for (int j = 0; j < c.tau(); ++j) {
    const int av = a[static_cast<std::size_t>(c.positions()[j]) - 1];
    const bool on_anchor_side =
        c.anchor() == Anchor::Upper ? 2 * av > m : 2 * av < m;
    if (on_anchor_side) word |= 1ull << j;
  }
  return BitVertex{word, c.tau()};
}

GridPoint from_cube(const BitVertex& b, const CubeCell& c) {
  if (b.k != c.tau())
    throw InvalidInputError("bit vertex has k=" + std::to_string(b.k) +
                            ", cell has tau=" + std::to_string(c.tau()));
  std::vector<int> coords(static_cast<std::size_t>(c.n()), c.m() / 2);
  for (int j = 0; j < c.tau(); ++j) {
    const std::size_t i = static_cast<std::size_t>(c.positions()[j]) - 1;
    coords[i] = b.bit(j) ? c.values()[j] : c.m() - c.values()[j];
  }
  return GridPoint(std::move(coords));
}

std::optional<CubeCell> CellStream::next() {
  if (!full_) {
    if (next_rep_ >= reps_.size()) return std::nullopt;
    return cell_of(reps_[next_rep_++], p_, anchor_);
  }
  const int lo = anchor_ == Anchor::Upper ? (p_.m + 1) / 2 : 0;
  const int hi = anchor_ == Anchor::Upper ? p_.m : p_.m / 2;
  if (done_) return std::nullopt;
  if (odometer_.empty()) {
    odometer_.assign(static_cast<std::size_t>(p_.n), lo);
  } else {
    int i = p_.n - 1;
    while (i >= 0 && odometer_[static_cast<std::size_t>(i)] == hi) {
      odometer_[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++odometer_[static_cast<std::size_t>(i)];
  }
  return cell_of(GridPoint(odometer_), p_, anchor_);
}

CellStream full_partition(const GridParams& p, Anchor anchor) {
  p.validate();
  return CellStream(p, anchor);
}

CellStream partial_partition(std::vector<GridPoint> reps, const GridParams& p,
                             Anchor anchor) {
  p.validate();
  for (const auto& r : reps)
    if (!in_area(r, p, anchor))
      throw InvalidInputError(to_string(r) +
                              " is not homogeneous for the given anchor");
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return CellStream(p, anchor, std::move(reps));
}

std::vector<CubeCell> collect_cells(CellStream stream) {
  std::vector<CubeCell> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<std::uint64_t> tau_histogram(const GridParams& p) {
  p.validate();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(p.n) + 1, 0);
  if (p.m % 2 == 1) {
    hist[static_cast<std::size_t>(p.n)] = homogeneous_count(p);
  } else {
    // even m: k coordinates out of n take one of m/2 values above m/2
    for (int k = 0; k <= p.n; ++k)
      hist[static_cast<std::size_t>(k)] = detail::checked_mul(
          binomial(p.n, k),
          detail::checked_pow(static_cast<std::uint64_t>(p.m) / 2, k));
  }
  return hist;
}

}  // namespace monorec
