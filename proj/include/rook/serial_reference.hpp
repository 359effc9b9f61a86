#pragma once

#include <vector>

#include "rook/algebra.hpp"
#include "rook/linalg.hpp"
#include "rook/tensor.hpp"

// Single-threaded versions of the OpenMP kernels. Tests compare the parallel
// results against these; the benchmark times both.
namespace rook::serial {

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
SparseRationalMatrix phi_matrix(int m, int n, const SizeCap& cap = {});
/// Plain insertion of every row in order, no deduplication.
SpanBasis row_reduce(const std::vector<SparseVector>& rows, std::size_t dim);

}  // namespace rook::serial
