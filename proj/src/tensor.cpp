#include "rook/tensor.hpp"

#include <limits>

namespace rook {

namespace {

void check_mn(int m, int n) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
}

std::vector<std::size_t> powers(int m, int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 1);
  for (int j = 1; j <= n; ++j) p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j - 1)] * static_cast<std::size_t>(m + 1);
  return p;
}

// Output index for input `in`, or npos when an isolated bottom vertex sees a
// nonzero digit. pw[j] = (m+1)^j; digit of vertex v sits at pw[n - v].
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::size_t image_index(const RookDiagram& d, const std::vector<int>& isolated_bottom, const std::vector<std::size_t>& pw,
                        int m, std::size_t in) {
  const int n = d.n();
  const auto base = static_cast<std::size_t>(m + 1);
  auto digit = [&](int v) { return (in / pw[static_cast<std::size_t>(n - v)]) % base; };
  for (int b : isolated_bottom)
    if (digit(b) != 0) return npos;
  std::size_t out = 0;
  for (int a = 1; a <= n; ++a) {
    const int b = d.img(a);
    if (b != 0) out += digit(b) * pw[static_cast<std::size_t>(n - a)];
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> diagram_pairs(const RookDiagram& d, int m) {
  const auto pw = powers(m, d.n());
  const auto iso = d.isolated_bottom();
  const std::size_t dim = pw.back();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t in = 0; in < dim; ++in) {
    const std::size_t o = image_index(d, iso, pw, m, in);
    if (o != npos) out.emplace_back(o, in);
  }
  return out;
}

}  // namespace

std::uint64_t phi_cells(int m, int n) {
  const std::uint64_t base = static_cast<std::uint64_t>(m) + 1;
  std::uint64_t v = 1;
  for (int j = 0; j < 2 * n; ++j) {
    if (v > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    v *= base;
  }
  return v;
}

void enforce_cap(int m, int n, const SizeCap& cap) {
  const std::uint64_t cells = phi_cells(m, n);
  if (cells > cap.max_cells)
    throw SizeCapError("size cap: (m+1)^(2n) = " +
                       (cells == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                            : std::to_string(cells)) +
                       " for m=" + std::to_string(m) + ", n=" + std::to_string(n) + " exceeds --max-cells " +
                       std::to_string(cap.max_cells));
}

std::size_t TensorIndex::linear() const {
  if (static_cast<int>(digits.size()) != n) throw std::invalid_argument("TensorIndex: wrong number of digits");
  std::size_t idx = 0;
  for (int dgt : digits) {
    if (dgt < 0 || dgt > m) throw std::invalid_argument("TensorIndex: digit outside {0..m}");
    idx = idx * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(dgt);
  }
  return idx;
}

TensorIndex TensorIndex::from_linear(int m, int n, std::size_t index) {
  if (index >= tensor_dimension(m, n)) throw std::out_of_range("TensorIndex: index out of range");
  TensorIndex t{m, n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int j = n - 1; j >= 0; --j) {
    t.digits[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(m + 1));
    index /= static_cast<std::size_t>(m + 1);
  }
  return t;
}

std::size_t tensor_dimension(int m, int n) {
  check_mn(m, n);
  return powers(m, n).back();
}

SparseRationalMatrix diagram_matrix(const RookDiagram& d, int m, const SizeCap& cap) {
  check_mn(m, d.n());
  enforce_cap(m, d.n(), cap);
  const std::size_t dim = tensor_dimension(m, d.n());
  std::vector<SparseRationalMatrix::Triplet> trips;
  for (const auto& [o, in] : diagram_pairs(d, m)) trips.push_back({o, in, 1});
  return SparseRationalMatrix(dim, dim, std::move(trips));
}

SparseRationalMatrix element_matrix(const AlgebraElement& a, int m, const SizeCap& cap) {
  check_mn(m, a.n());
  enforce_cap(m, a.n(), cap);
  const std::size_t dim = tensor_dimension(m, a.n());
  std::vector<SparseRationalMatrix::Triplet> trips;
  for (const auto& [d, c] : a.terms())
    for (const auto& [o, in] : diagram_pairs(d, m)) trips.push_back({o, in, c});
  return SparseRationalMatrix(dim, dim, std::move(trips));
}

SparseRationalMatrix phi_matrix(int m, int n, const SizeCap& cap) {
  check_mn(m, n);
  enforce_cap(m, n, cap);
  const auto& basis = DiagramBasis::of(n);
  const std::size_t dim = tensor_dimension(m, n);
  std::vector<std::vector<std::size_t>> columns(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(basis.size()); ++j) {
    auto& col = columns[static_cast<std::size_t>(j)];
    for (const auto& [o, in] : diagram_pairs(basis.at(static_cast<std::size_t>(j)), m)) col.push_back(o * dim + in);
  }
  std::vector<SparseRationalMatrix::Triplet> trips;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t row : columns[j]) trips.push_back({row, j, 1});
  return SparseRationalMatrix(dim * dim, basis.size(), std::move(trips));
}

SpanBasis annihilator_basis(int m, int n, const SizeCap& cap) {
  const auto phi = phi_matrix(m, n, cap);
  return row_reduce(nullspace(phi), phi.cols());
}

}  // namespace rook
