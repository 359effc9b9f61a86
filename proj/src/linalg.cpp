#include "rook/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rook {

// ------------------------------------------------------------------ Rational

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const mpz_class num = parse_int(text.substr(0, slash));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// -------------------------------------------------------------- SparseVector

namespace {

void normalize_entries(std::vector<SparseVector::Entry>& e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i + 1;
    Rational sum = e[i].second;
    while (j < e.size() && e[j].first == e[i].first) sum += e[j++].second;
    sum.canonicalize();  // callers may pass unreduced fractions like 2/2
    if (sum != 0) {
      e[out].first = e[i].first;
      e[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  e.resize(out);
}

}  // namespace

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {
  for (const auto& [i, v] : entries_)
    if (i >= dim_) throw std::out_of_range("sparse vector index " + std::to_string(i) + " >= dimension");
  normalize_entries(entries_);
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) e.emplace_back(i, dense[i]);
  return SparseVector(dense.size(), std::move(e));
}

SparseVector SparseVector::unit(std::size_t dim, std::size_t i) { return SparseVector(dim, {{i, Rational(1)}}); }

Rational SparseVector::operator[](std::size_t i) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, std::size_t k) { return e.first < k; });
  return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> d(dim_);
  for (const auto& [i, v] : entries_) d[i] = v;
  return d;
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("vector dimensions differ");
  std::vector<SparseVector::Entry> e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return SparseVector(a.dim_, std::move(e));
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector nb = b;
  nb *= Rational(-1);
  return a + nb;
}

// ------------------------------------------------------ SparseRationalMatrix

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols), triplets_(std::move(triplets)) {
  for (const auto& t : triplets_)
    if (t.row >= rows_ || t.col >= cols_) throw std::out_of_range("matrix triplet outside shape");
  std::sort(triplets_.begin(), triplets_.end(),
            [](const Triplet& a, const Triplet& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < triplets_.size();) {
    std::size_t j = i + 1;
    Rational sum = triplets_[i].value;
    while (j < triplets_.size() && triplets_[j].row == triplets_[i].row && triplets_[j].col == triplets_[i].col)
      sum += triplets_[j++].value;
    sum.canonicalize();
    if (sum != 0) {
      triplets_[out].row = triplets_[i].row;
      triplets_[out].col = triplets_[i].col;
      triplets_[out].value = std::move(sum);
      ++out;
    }
    i = j;
  }
  triplets_.resize(out);
}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Rational(1)});
  return SparseRationalMatrix(n, n, std::move(t));
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense[0].size() : 0;
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) t.push_back({r, c, dense[r][c]});
  }
  return SparseRationalMatrix(rows, cols, std::move(t));
}

Rational SparseRationalMatrix::at(std::size_t r, std::size_t c) const {
  const auto it = std::lower_bound(triplets_.begin(), triplets_.end(), std::make_pair(r, c),
                                   [](const Triplet& t, const std::pair<std::size_t, std::size_t>& k) {
                                     return std::tie(t.row, t.col) < std::tie(k.first, k.second);
                                   });
  return (it != triplets_.end() && it->row == r && it->col == c) ? it->value : Rational(0);
}

std::vector<std::pair<std::size_t, SparseVector>> SparseRationalMatrix::row_vectors() const {
  std::vector<std::pair<std::size_t, SparseVector>> out;
  for (std::size_t i = 0; i < triplets_.size();) {
    const std::size_t r = triplets_[i].row;
    std::vector<SparseVector::Entry> e;
    for (; i < triplets_.size() && triplets_[i].row == r; ++i) e.emplace_back(triplets_[i].col, triplets_[i].value);
    out.emplace_back(r, SparseVector(cols_, std::move(e)));
  }
  return out;
}

SparseVector SparseRationalMatrix::operator*(const SparseVector& x) const {
  if (x.dimension() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<SparseVector::Entry> e;
  for (const auto& t : triplets_) {
    const Rational xv = x[t.col];
    if (xv != 0) e.emplace_back(t.row, t.value * xv);
  }
  return SparseVector(rows_, std::move(e));
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  // index b's rows
  std::vector<std::size_t> start(b.rows_ + 1, 0);
  for (const auto& t : b.triplets_) ++start[t.row + 1];
  for (std::size_t r = 0; r < b.rows_; ++r) start[r + 1] += start[r];
  std::vector<SparseRationalMatrix::Triplet> out;
  for (const auto& ta : a.triplets_)
    for (std::size_t k = start[ta.col]; k < start[ta.col + 1]; ++k) {
      const auto& tb = b.triplets_[k];
      out.push_back({ta.row, tb.col, ta.value * tb.value});
    }
  return SparseRationalMatrix(a.rows_, b.cols_, std::move(out));
}

SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  auto t = a.triplets_;
  t.insert(t.end(), b.triplets_.begin(), b.triplets_.end());
  return SparseRationalMatrix(a.rows_, a.cols_, std::move(t));
}

SparseRationalMatrix SparseRationalMatrix::scaled(const Rational& c) const {
  auto t = triplets_;
  for (auto& x : t) x.value *= c;
  return SparseRationalMatrix(rows_, cols_, std::move(t));
}

// ----------------------------------------------------------------- SpanBasis

SpanBasis::SpanBasis(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

SparseVector SpanBasis::reduce(const SparseVector& v) const {
  if (v.dimension() != dim_) throw std::invalid_argument("span basis: dimension mismatch");
  // Rows are fully reduced, so subtracting one never reintroduces another
  // pivot column: only the pivots present in v need eliminating.
  std::vector<SparseVector::Entry> acc;
  acc.reserve(v.nnz());
  for (const auto& [col, val] : v.entries()) {
    const std::ptrdiff_t pr = pivot_row_[col];
    if (pr < 0) {
      acc.emplace_back(col, val);
      continue;
    }
    for (const auto& [c, x] : rows_[static_cast<std::size_t>(pr)].entries())
      if (c != col) acc.emplace_back(c, -val * x);
  }
  return SparseVector(dim_, std::move(acc));
}

bool SpanBasis::insert(const SparseVector& v) {
  SparseVector res = reduce(v);
  if (res.is_zero()) return false;
  const std::size_t pc = res.entries().front().first;
  res *= Rational(1) / res.entries().front().second;

  // clear the new pivot column from existing rows
  for (auto& row : rows_) {
    const Rational x = row[pc];
    if (x == 0) continue;
    SparseVector scaled = res;
    scaled *= x;
    row = row - scaled;
  }
  pivot_row_[pc] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_col_.push_back(pc);
  rows_.push_back(std::move(res));
  return true;
}

bool SpanBasis::contains(const SpanBasis& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("span basis: dimension mismatch");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<SparseVector> SpanBasis::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < dim_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  return out;
}

std::vector<std::size_t> SpanBasis::pivot_columns() const {
  std::vector<std::size_t> out = pivot_col_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVector> SpanBasis::kernel() const {
  std::vector<SparseVector> out;
  std::vector<std::vector<SparseVector::Entry>> by_free(dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, x] : rows_[i].entries())
      if (c != pivot_col_[i]) by_free[c].emplace_back(pivot_col_[i], -x);
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    auto e = std::move(by_free[f]);
    e.emplace_back(f, Rational(1));
    out.emplace_back(dim_, std::move(e));
  }
  return out;
}

std::pair<SpanBasis, bool> span_insert(SpanBasis b, const SparseVector& v) {
  const bool grew = b.insert(v);
  return {std::move(b), grew};
}

bool span_contains(const SpanBasis& b, const SparseVector& v) { return b.contains(v); }

bool span_equal(const SpanBasis& a, const SpanBasis& b) { return a.contains(b) && b.contains(a); }

// ----------------------------------------------------------- row reduction

namespace {

struct RowHash {
  std::size_t operator()(const SparseVector* v) const noexcept {
    std::size_t h = v->nnz();
    for (const auto& [i, x] : v->entries()) {
      h = h * 1000003u ^ i;
      h = h * 31u ^ static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
    }
    return h;
  }
};
struct RowEq {
  bool operator()(const SparseVector* a, const SparseVector* b) const { return *a == *b; }
};

}  // namespace

SpanBasis row_reduce(const std::vector<SparseVector>& rows, std::size_t dim, int chunks) {
  std::vector<const SparseVector*> unique;
  {
    std::unordered_set<const SparseVector*, RowHash, RowEq> seen;
    for (const auto& r : rows) {
      if (r.dimension() != dim) throw std::invalid_argument("row_reduce: dimension mismatch");
      if (!r.is_zero() && seen.insert(&r).second) unique.push_back(&r);
    }
  }

  if (chunks <= 0) chunks = std::min<int>(omp_get_max_threads(), static_cast<int>(unique.size() / 64));
  chunks = std::max(1, std::min<int>(chunks, static_cast<int>(std::max<std::size_t>(unique.size(), 1))));
  std::vector<SpanBasis> partial(static_cast<std::size_t>(chunks), SpanBasis(dim));
#pragma omp parallel for schedule(static, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::size_t lo = unique.size() * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
    const std::size_t hi = unique.size() * static_cast<std::size_t>(c + 1) / static_cast<std::size_t>(chunks);
    auto& b = partial[static_cast<std::size_t>(c)];
    for (std::size_t i = lo; i < hi && b.dimension() < dim; ++i) b.insert(*unique[i]);
  }
  SpanBasis out = std::move(partial[0]);
  for (std::size_t c = 1; c < partial.size(); ++c)
    for (const auto& r : partial[c].rows()) {
      if (out.dimension() == dim) break;
      out.insert(r);
    }
  return out;
}

SpanBasis row_space(const SparseRationalMatrix& m) {
  std::vector<SparseVector> rows;
  for (auto& [r, v] : m.row_vectors()) rows.push_back(std::move(v));
  return row_reduce(rows, m.cols());
}

std::size_t rank(const SparseRationalMatrix& m) { return row_space(m).dimension(); }

std::vector<SparseVector> nullspace(const SparseRationalMatrix& m) { return row_space(m).kernel(); }

}  // namespace rook
