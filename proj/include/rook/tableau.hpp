#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rook {

/// Weakly decreasing sequence of positive parts. The empty partition is
/// allowed (size 0, length 0).
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool empty() const { return parts_.empty(); }
  /// Lengths of the columns, i.e. the conjugate partition.
  std::vector<int> column_lengths() const;

  /// "2,1"; "empty" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of r, lexicographically decreasing: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int r);
/// Every partition of every r in 0..n, grouped by r.
std::vector<Partition> partitions_up_to(int n);

/// An injective filling of the Young diagram of `shape` by entries of {1..n}.
class Tableau {
 public:
  Tableau() = default;
  /// rows[i] lists the entries of row i left to right. Throws
  /// std::invalid_argument when rows do not fit the shape, an entry is out of
  /// range, or entries repeat.
  Tableau(Partition shape, int n, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  /// Entries of column j, top to bottom.
  std::vector<int> column(int j) const;
  int column_count() const { return shape_.empty() ? 0 : shape_[0]; }
  /// Sorted image set.
  std::vector<int> content() const;

  std::string to_string() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
};

/// 1..r filled along successive rows.
Tableau canonical_tableau_row(const Partition& shape, int n);
/// 1..r filled down successive columns.
Tableau canonical_tableau_col(const Partition& shape, int n);
/// Every filling of `shape` with distinct entries of {1..n}, in lexicographic
/// order of the row-by-row reading word.
std::vector<Tableau> all_tableaux(const Partition& shape, int n);

}  // namespace rook
