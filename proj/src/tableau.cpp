#include "rook/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rook {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::column_lengths() const {
  std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return cols;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "empty";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int r = 0; r <= n; ++r) {
    auto ps = partitions_of(r);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Tableau::Tableau(Partition shape, int n, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), n_(n), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau has " + std::to_string(rows_.size()) + " rows, shape has " +
                                std::to_string(shape_.length()));
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_[static_cast<int>(i)])
      throw std::invalid_argument("tableau row " + std::to_string(i + 1) + " does not match the shape");
    for (int v : rows_[i]) {
      if (v < 1 || v > n) throw std::invalid_argument("tableau entry " + std::to_string(v) + " outside {1..n}");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("tableau entry " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

std::vector<int> Tableau::column(int j) const {
  std::vector<int> out;
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) > j) out.push_back(row[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? "|" : "");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
  }
  os << ']';
  return os.str();
}

Tableau canonical_tableau_row(const Partition& shape, int n) {
  if (shape.size() > n) throw std::invalid_argument("shape larger than n");
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : shape.parts()) {
    std::vector<int> row;
    for (int j = 0; j < p; ++j) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return Tableau(shape, n, std::move(rows));
}

Tableau canonical_tableau_col(const Partition& shape, int n) {
  if (shape.size() > n) throw std::invalid_argument("shape larger than n");
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  int next = 1;
  const auto cols = shape.column_lengths();
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < cols[j]; ++i) rows[static_cast<std::size_t>(i)][j] = next++;
  return Tableau(shape, n, std::move(rows));
}

std::vector<Tableau> all_tableaux(const Partition& shape, int n) {
  const int r = shape.size();
  if (r > n) return {};
  std::vector<Tableau> out;
  std::vector<int> word;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == r) {
      std::vector<std::vector<int>> rows;
      std::size_t k = 0;
      for (int p : shape.parts()) {
        rows.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(k),
                          word.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(p)));
        k += static_cast<std::size_t>(p);
      }
      out.emplace_back(shape, n, std::move(rows));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      word.push_back(v);
      rec();
      word.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec();
  return out;
}

}  // namespace rook
