#ifndef ARS_LINALG_HPP
#define ARS_LINALG_HPP

#include "ars/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <optional>
#include <vector>

namespace ars {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix operator*(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) elimination. Pivots are the first nonzero entry
/// in the column, scanning rows from the top.
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Row space basis in reduced row echelon form.
std::vector<RationalVector> row_reduce(std::vector<RationalVector> rows, std::size_t cols);

/// Incrementally built basis of a subspace of a sparse vector space whose
/// coordinates are indexed by Key. Each stored echelon row remembers how it
/// was formed from the inserted vectors, so coordinates of a member vector
/// in terms of the inserted basis come out of a single reduction.
template <class Key, class Less = std::less<Key>>
class SparseEchelon {
public:
  using Vector = std::map<Key, Rational, Less>;

  /// Without tracking, coordinates() is unavailable but insertion and
  /// membership avoid the per-row bookkeeping.
  explicit SparseEchelon(bool track_coordinates = true) : track_(track_coordinates) {}

  std::size_t size() const { return rows_.size(); }

  /// Inserts v if it is independent of the current span. Returns true on insertion.
  bool insert(const Vector& v) {
    auto [rest, combo] = reduce(v);
    if (rest.empty())
      return false;
    if (track_) {
      for (auto& c : combo)
        c = -c;
      combo.push_back(Rational(1));
      for (auto& row : rows_)
        row.combo.resize(rows_.size() + 1);
    }
    const Key pivot = rest.rbegin()->first;
    rows_.push_back(Row{std::move(rest), std::move(combo)});
    pivots_.emplace(pivot, rows_.size() - 1);
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).first.empty(); }

  /// Coordinates of v in the basis of inserted vectors (insertion order).
  std::optional<RationalVector> coordinates(const Vector& v) const {
    if (!track_)
      throw std::logic_error("SparseEchelon built without coordinate tracking");
    auto [rest, combo] = reduce(v);
    if (!rest.empty())
      return std::nullopt;
    return combo;
  }

private:
  struct Row {
    Vector values;
    // Row = sum_i combo[i] * inserted_i.
    RationalVector combo;
  };

  std::pair<Vector, RationalVector> reduce(Vector v) const {
    RationalVector combo(track_ ? rows_.size() : 0);
    // Eliminate from the largest key downwards; only pivot keys are removed.
    auto it = v.rbegin();
    while (it != v.rend()) {
      const auto found = pivots_.find(it->first);
      if (found == pivots_.end()) {
        ++it;
        continue;
      }
      const Row& row = rows_[found->second];
      const Key key = it->first;
      const Rational factor = it->second / row.values.rbegin()->second;
      for (const auto& [k, c] : row.values) {
        auto [slot, inserted] = v.try_emplace(k, 0);
        slot->second -= factor * c;
        if (is_zero(slot->second))
          v.erase(slot);
      }
      if (track_)
        for (std::size_t i = 0; i < row.combo.size(); ++i)
          combo[i] += factor * row.combo[i];
      it = std::make_reverse_iterator(v.lower_bound(key));
    }
    return {std::move(v), std::move(combo)};
  }

  bool track_;
  std::vector<Row> rows_;
  std::map<Key, std::size_t, Less> pivots_;
};

} // namespace ars

#endif
