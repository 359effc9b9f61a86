#include "rook/serial_reference.hpp"

#include <stdexcept>

namespace rook::serial {

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mul: mismatched n");
  AlgebraElement out(a.n());
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) out.add_term(multiply(d1, d2), c1 * c2);
  return out;
}

SparseRationalMatrix phi_matrix(int m, int n, const SizeCap& cap) {
  enforce_cap(m, n, cap);
  const auto& basis = DiagramBasis::of(n);
  const std::size_t dim = tensor_dimension(m, n);
  std::vector<SparseRationalMatrix::Triplet> trips;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto dm = diagram_matrix(basis.at(j), m, cap);
    for (const auto& t : dm.triplets()) trips.push_back({t.row * dim + t.col, j, t.value});
  }
  return SparseRationalMatrix(dim * dim, basis.size(), std::move(trips));
}

SpanBasis row_reduce(const std::vector<SparseVector>& rows, std::size_t dim) {
  SpanBasis b(dim);
  for (const auto& r : rows) b.insert(r);
  return b;
}

}  // namespace rook::serial
