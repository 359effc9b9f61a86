#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rook/algebra.hpp"
#include "rook/linalg.hpp"
#include "rook/tableau.hpp"

namespace rook {

/// A two-sided ideal of FR_n as a subspace in diagram coordinates.
struct IdealSpan {
  int n = 0;
  SpanBasis basis;
  AlgebraElement generator;

  std::size_t dimension() const { return basis.dimension(); }
  bool contains(const AlgebraElement& a) const { return basis.contains(a.to_vector()); }
  /// Basis rows as algebra elements.
  std::vector<AlgebraElement> elements() const;
};

/// Index tables for multiplying basis diagrams by the generators
/// s_1..s_{n-1}, p_1..p_n. left[g][i] is the index of g * D_i, right[g][i]
/// that of D_i * g. Built once per n.
struct GeneratorTables {
  std::vector<std::vector<std::size_t>> left;
  std::vector<std::vector<std::size_t>> right;

  static const GeneratorTables& of(int n);
};

/// Image of a coordinate vector under a diagram-index map.
SparseVector apply_index_map(const std::vector<std::size_t>& map, const SparseVector& v);

/// FR_n a FR_n, saturated breadth-first under left and right generator
/// multiplication. With `stop_dim`, growth stops once that dimension is
/// reached and a closure round over all generators confirms stability.
/// Throws std::invalid_argument for a zero generator.
IdealSpan two_sided_ideal(const AlgebraElement& a, std::optional<std::size_t> stop_dim = std::nullopt);

/// Span of D1 a D2 over every pair of diagrams. Throws std::invalid_argument
/// for n > 3 or a zero generator.
IdealSpan two_sided_ideal_exhaustive(const AlgebraElement& a);

/// Every basis row maps back into the span under each generator on each side.
bool is_closed_under_generators(const SpanBasis& basis, int n);

/// Ideal generated by e(t^lambda).
IdealSpan block_ideal(const Partition& shape, int n);

}  // namespace rook
