#include "rook/ideals.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace rook {

std::vector<AlgebraElement> IdealSpan::elements() const {
  std::vector<AlgebraElement> out;
  for (const auto& r : basis.rows()) out.push_back(AlgebraElement::from_vector(n, r));
  return out;
}

const GeneratorTables& GeneratorTables::of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GeneratorTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    const auto& basis = DiagramBasis::of(n);
    auto t = std::make_unique<GeneratorTables>();
    for (const auto& g : generators(n)) {
      std::vector<std::size_t> l(basis.size()), r(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        l[i] = basis.index(multiply(g, basis.at(i)));
        r[i] = basis.index(multiply(basis.at(i), g));
      }
      t->left.push_back(std::move(l));
      t->right.push_back(std::move(r));
    }
    slot = std::move(t);
  }
  return *slot;
}

SparseVector apply_index_map(const std::vector<std::size_t>& map, const SparseVector& v) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(v.nnz());
  for (const auto& [i, c] : v.entries()) entries.emplace_back(map[i], c);
  return SparseVector(v.dimension(), std::move(entries));
}

namespace {

// Inserts every generator image of v; new vectors go to the back of the queue.
void expand(SpanBasis& basis, const GeneratorTables& tables, const SparseVector& v, std::deque<SparseVector>& queue,
            std::size_t stop_dim) {
  for (const auto* side : {&tables.left, &tables.right})
    for (const auto& map : *side) {
      if (basis.dimension() >= stop_dim) return;
      SparseVector w = apply_index_map(map, v);
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
}

}  // namespace

IdealSpan two_sided_ideal(const AlgebraElement& a, std::optional<std::size_t> stop_dim) {
  if (a.is_zero()) throw std::invalid_argument("two_sided_ideal: zero generator");
  const int n = a.n();
  const auto& tables = GeneratorTables::of(n);
  IdealSpan ideal{n, SpanBasis(DiagramBasis::of(n).size()), a};

  std::size_t limit = stop_dim.value_or(SIZE_MAX);
  std::deque<SparseVector> queue;
  const SparseVector seed = a.to_vector();
  ideal.basis.insert(seed);
  queue.push_back(seed);

  for (;;) {
    bool stopped = false;
    while (!queue.empty()) {
      if (ideal.basis.dimension() >= limit) {
        queue.clear();
        stopped = true;
        break;
      }
      const SparseVector v = std::move(queue.front());
      queue.pop_front();
      expand(ideal.basis, tables, v, queue, limit);
    }
    if (!stopped) break;
    // Closure round after an early stop; anything that escapes the span
    // restarts saturation without the target.
    for (const auto& row : ideal.basis.rows()) {
      for (const auto* side : {&tables.left, &tables.right})
        for (const auto& map : *side) {
          SparseVector w = apply_index_map(map, row);
          if (ideal.basis.insert(w)) queue.push_back(std::move(w));
        }
    }
    if (queue.empty()) break;
    limit = SIZE_MAX;
  }
  return ideal;
}

IdealSpan two_sided_ideal_exhaustive(const AlgebraElement& a) {
  if (a.is_zero()) throw std::invalid_argument("two_sided_ideal_exhaustive: zero generator");
  const int n = a.n();
  if (n > 3) throw std::invalid_argument("two_sided_ideal_exhaustive: only for n <= 3");
  const auto& diagrams = DiagramBasis::of(n).diagrams();
  IdealSpan ideal{n, SpanBasis(diagrams.size()), a};
  for (const auto& d1 : diagrams) {
    const AlgebraElement left = mul(d1, a);
    for (const auto& d2 : diagrams) ideal.basis.insert(mul(left, d2).to_vector());
  }
  return ideal;
}

bool is_closed_under_generators(const SpanBasis& basis, int n) {
  const auto& tables = GeneratorTables::of(n);
  for (const auto& row : basis.rows())
    for (const auto* side : {&tables.left, &tables.right})
      for (const auto& map : *side)
        if (!basis.contains(apply_index_map(map, row))) return false;
  return true;
}

IdealSpan block_ideal(const Partition& shape, int n) {
  return two_sided_ideal(quasi_idempotent_e(canonical_tableau_row(shape, n)));
}

}  // namespace rook
