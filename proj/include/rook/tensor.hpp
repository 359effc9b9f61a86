#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rook/algebra.hpp"
#include "rook/diagram.hpp"
#include "rook/linalg.hpp"

namespace rook {

/// Guard on the number of rows of the phi-matrix, (m+1)^(2n).
struct SizeCap {
  std::uint64_t max_cells = 10'000'000;
};

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (m+1)^(2n), saturating at UINT64_MAX.
std::uint64_t phi_cells(int m, int n);
/// Throws SizeCapError naming the offending dimension.
void enforce_cap(int m, int n, const SizeCap& cap);

/// A basis tensor v_{i_1} x ... x v_{i_n} of U^{xn}, digits in {0..m}
/// (0 is the direction of F). Linear index is big-endian base m+1.
struct TensorIndex {
  int m = 0;
  int n = 0;
  std::vector<int> digits;

  std::size_t linear() const;
  static TensorIndex from_linear(int m, int n, std::size_t index);
};

/// (m+1)^n.
std::size_t tensor_dimension(int m, int n);

/// Matrix of d on U^{xn}; inputs are bottom vertices, outputs top vertices.
/// Column i is zero unless i_b = 0 for every isolated bottom vertex b;
/// otherwise it is e_k with k_a = i_{img(a)}, and k_a = 0 for isolated a.
SparseRationalMatrix diagram_matrix(const RookDiagram& d, int m, const SizeCap& cap = {});
SparseRationalMatrix element_matrix(const AlgebraElement& a, int m, const SizeCap& cap = {});

/// Column j is diagram_matrix of the j-th diagram of DiagramBasis::of(n),
/// flattened row-major: row index out * (m+1)^n + in.
SparseRationalMatrix phi_matrix(int m, int n, const SizeCap& cap = {});

/// Kernel of phi in diagram coordinates.
SpanBasis annihilator_basis(int m, int n, const SizeCap& cap = {});

}  // namespace rook
