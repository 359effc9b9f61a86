#include "rook/specht.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rook {

Tabloid::Tabloid(Partition shape, int n, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), n_(n), rows_(std::move(rows)) {
  // Reuse the tableau validation, then forget the order inside rows.
  Tableau check(shape_, n_, rows_);
  (void)check;
  for (auto& row : rows_) std::sort(row.begin(), row.end());
}

std::vector<int> Tabloid::content() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

Tabloid tabloid_of(const Tableau& t) { return Tabloid(t.shape(), t.n(), t.rows()); }

void accumulate(TabloidVector& v, const Tabloid& x, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = v.try_emplace(x, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

namespace {

void require_n(const RookDiagram& d, int n) {
  if (d.n() != n) throw std::invalid_argument("diagram and tableau have different n");
}

// Entry b goes to the top partner of b, or the whole result is zero.
std::optional<std::vector<std::vector<int>>> move_entries(const RookDiagram& d,
                                                          const std::vector<std::vector<int>>& rows) {
  const RookDiagram inv = star(d);
  std::vector<std::vector<int>> out = rows;
  for (auto& row : out)
    for (int& b : row) {
      const int a = inv.img(b);
      if (a == 0) return std::nullopt;
      b = a;
    }
  return out;
}

}  // namespace

std::optional<Tableau> act_on_tableau(const RookDiagram& d, const Tableau& t) {
  require_n(d, t.n());
  auto rows = move_entries(d, t.rows());
  if (!rows) return std::nullopt;
  return Tableau(t.shape(), t.n(), std::move(*rows));
}

std::optional<Tableau> act_on_tableau_quadruple(const RookDiagram& d, const Tableau& t) {
  require_n(d, t.n());
  const Quadruple q = factorize(d);
  const auto cont = t.content();
  for (int i = 1; i <= q.r; ++i)
    if (std::binary_search(cont.begin(), cont.end(), q.d2(i))) return std::nullopt;
  const Permutation d2_inv = q.d2.inverse();
  const Permutation sigma_inv = q.sigma.inverse();
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& b : row) b = q.d1(sigma_inv(d2_inv(b)));
  return Tableau(t.shape(), t.n(), std::move(rows));
}

std::optional<Tabloid> act_on_tabloid(const RookDiagram& d, const Tabloid& x) {
  require_n(d, x.n());
  auto rows = move_entries(d, x.rows());
  if (!rows) return std::nullopt;
  return Tabloid(x.shape(), x.n(), std::move(*rows));
}

TabloidVector act_on_tabloid_vector(const AlgebraElement& a, const TabloidVector& v) {
  TabloidVector out;
  for (const auto& [d, c] : a.terms())
    for (const auto& [x, y] : v)
      if (auto moved = act_on_tabloid(d, x)) accumulate(out, *moved, c * y);
  return out;
}

std::vector<std::pair<Permutation, int>> column_stabilizer(const Tableau& t) {
  const int n = t.n();
  std::vector<std::pair<Permutation, int>> out{{Permutation::identity(n), 1}};
  for (int j = 0; j < t.column_count(); ++j) {
    const auto col = t.column(j);
    if (col.size() < 2) continue;
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<Permutation, int>> next;
    std::vector<int> arrangement = sorted;
    do {
      auto images = Permutation::identity(n).images();
      for (std::size_t k = 0; k < sorted.size(); ++k) images[static_cast<std::size_t>(sorted[k] - 1)] = arrangement[k];
      const Permutation w(images);
      for (const auto& [g, s] : out) next.emplace_back(g * w, s * w.sign());
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TabloidVector polytabloid(const Tableau& t) {
  TabloidVector out;
  if (t.shape().empty()) {
    accumulate(out, Tabloid(t.shape(), t.n(), {}), 1);
    return out;
  }
  const Tabloid base = tabloid_of(t);
  for (const auto& [w, s] : column_stabilizer(t)) {
    auto moved = act_on_tabloid(w.to_diagram(), base);
    accumulate(out, *moved, s);
  }
  return out;
}

SparseVector SpechtModule::coordinates(const TabloidVector& v) const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(v.size());
  for (const auto& [x, c] : v) {
    auto it = std::lower_bound(coords.begin(), coords.end(), x);
    if (it == coords.end() || *it != x) throw std::invalid_argument("tabloid outside the Specht coordinates");
    entries.emplace_back(static_cast<std::size_t>(it - coords.begin()), c);
  }
  return SparseVector(coords.size(), std::move(entries));
}

SpechtModule specht_module(const Partition& shape, int n) {
  if (shape.size() > n) throw std::invalid_argument("specht_module: |lambda| exceeds n");
  const auto tableaux = all_tableaux(shape, n);
  std::vector<TabloidVector> polys(tableaux.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tableaux.size()); ++i)
    polys[static_cast<std::size_t>(i)] = polytabloid(tableaux[static_cast<std::size_t>(i)]);

  SpechtModule m{shape, n, {}, {}};
  for (const auto& p : polys)
    for (const auto& [x, c] : p) m.coords.push_back(x);
  std::sort(m.coords.begin(), m.coords.end());
  m.coords.erase(std::unique(m.coords.begin(), m.coords.end()), m.coords.end());

  std::vector<SparseVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(m.coordinates(p));
  m.basis = row_reduce(rows, m.coords.size());
  return m;
}

SpanBasis specht_basis(const Partition& shape, int n) { return specht_module(shape, n).basis; }

std::size_t specht_dimension(const Partition& shape, int n) { return specht_basis(shape, n).dimension(); }

}  // namespace rook
