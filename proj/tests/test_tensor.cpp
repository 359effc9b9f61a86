#include <doctest.h>

#include <random>

#include "rook/ideals.hpp"
#include "rook/tensor.hpp"

using namespace rook;

namespace {

std::size_t idx(int m, std::vector<int> digits) {
  const int n = static_cast<int>(digits.size());
  return TensorIndex{m, n, std::move(digits)}.linear();
}

// Single output of column `in`, or -1 for a zero column.
long image_of(const SparseRationalMatrix& mat, std::size_t in) {
  long out = -1;
  for (const auto& t : mat.triplets())
    if (t.col == in) {
      CHECK(out == -1);
      CHECK(t.value == 1);
      out = static_cast<long>(t.row);
    }
  return out;
}

}  // namespace

TEST_CASE("tensor indices") {
  CHECK(idx(2, {1, 0, 2}) == 1 * 9 + 0 * 3 + 2);
  CHECK(tensor_dimension(1, 3) == 8);
  for (std::size_t i = 0; i < 27; ++i) CHECK(TensorIndex::from_linear(2, 3, i).linear() == i);
  CHECK_THROWS(TensorIndex::from_linear(1, 2, 4));
  CHECK_THROWS(idx(1, {2, 0}));
}

TEST_CASE("generators act by the defining formulas") {
  for (int m = 1; m <= 3; ++m) {
    const auto s1 = diagram_matrix({2, 1}, m);
    const auto p1 = diagram_matrix({0, 2}, m);
    for (int i1 = 0; i1 <= m; ++i1)
      for (int i2 = 0; i2 <= m; ++i2) {
        CHECK(image_of(s1, idx(m, {i1, i2})) == static_cast<long>(idx(m, {i2, i1})));
        const long expected = i1 == 0 ? static_cast<long>(idx(m, {0, i2})) : -1;
        CHECK(image_of(p1, idx(m, {i1, i2})) == expected);
      }
  }
  // p_2 and s_2 inside n = 3.
  const int m = 2;
  const auto p2 = diagram_matrix({1, 0, 3}, m);
  const auto s2 = diagram_matrix({1, 3, 2}, m);
  for (std::size_t in = 0; in < 27; ++in) {
    const auto d = TensorIndex::from_linear(m, 3, in).digits;
    CHECK(image_of(s2, in) == static_cast<long>(idx(m, {d[0], d[2], d[1]})));
    CHECK(image_of(p2, in) == (d[1] == 0 ? static_cast<long>(in) : -1));
  }
}

TEST_CASE("hand evaluation of the top anti-symmetrizer") {
  // On (0,1) with m = 1: (0,1) - (1,0) - (0,1) - 0 + (1,0) + 0 = 0.
  const auto y = element_matrix(Y_top(2, 2), 1);
  CHECK(y.is_zero());
  const std::size_t in = idx(1, {0, 1});
  Rational total_01 = 0, total_10 = 0;
  const AlgebraElement y2 = Y_top(2, 2);
  for (const auto& [d, c] : y2.terms()) {
    const long out = image_of(diagram_matrix(d, 1), in);
    if (out == static_cast<long>(idx(1, {0, 1}))) total_01 += c;
    if (out == static_cast<long>(idx(1, {1, 0}))) total_10 += c;
  }
  CHECK(total_01 == 0);
  CHECK(total_10 == 0);
}

TEST_CASE("element matrices") {
  for (int n = 1; n <= 3; ++n)
    CHECK(element_matrix(AlgebraElement::basis(RookDiagram::identity(n)), 2) ==
          SparseRationalMatrix::identity(tensor_dimension(2, n)));
  CHECK(element_matrix(Y_top(2, 2), 1).is_zero());
  CHECK(element_matrix(Y_top(2, 3), 1).is_zero());
  CHECK(element_matrix(Y_top(3, 3), 2).is_zero());
  CHECK(element_matrix(Y_top(2, 4), 1).is_zero());
  CHECK(element_matrix(Y_top(3, 4), 2).is_zero());
  CHECK_FALSE(element_matrix(Y_top(2, 2), 2).is_zero());
}

TEST_CASE("representation is multiplicative on all pairs") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) {
      const auto all = enumerate(n);
      std::vector<SparseRationalMatrix> mats;
      for (const auto& d : all) mats.push_back(diagram_matrix(d, m));
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b)
          CHECK(mats[DiagramBasis::of(n).index(multiply(all[a], all[b]))] == mats[a] * mats[b]);
    }
}

TEST_CASE("representation is multiplicative on sampled pairs at n = 4") {
  std::mt19937_64 rng(42);
  const auto all = enumerate(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k < 200; ++k) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      CHECK(diagram_matrix(multiply(a, b), m) == diagram_matrix(a, m) * diagram_matrix(b, m));
    }
}

TEST_CASE("factorized permutation matches on surviving inputs") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const auto& d : enumerate(n)) {
        const Quadruple q = factorize(d);
        const auto perm = (q.d1.inverse() * q.sigma * q.d2).to_diagram();
        const auto dm = diagram_matrix(d, m);
        const auto pm = diagram_matrix(perm, m);
        const auto iso = d.isolated_bottom();
        for (std::size_t in = 0; in < tensor_dimension(m, n); ++in) {
          const auto digits = TensorIndex::from_linear(m, n, in).digits;
          bool conflict = false;
          for (int b : iso) conflict = conflict || digits[static_cast<std::size_t>(b - 1)] != 0;
          if (conflict) {
            CHECK(image_of(dm, in) == -1);
          } else {
            CHECK(image_of(dm, in) == image_of(pm, in));
          }
        }
      }
}

TEST_CASE("phi matrix shape, vectorization and rank") {
  const auto phi = phi_matrix(1, 2);
  CHECK(phi.rows() == 16);
  CHECK(phi.cols() == 7);
  CHECK(rank(phi) == 6);
  CHECK(rank(phi_matrix(2, 2)) == 7);
  CHECK(rank(phi_matrix(3, 3)) == 34);
  const auto& basis = DiagramBasis::of(2);
  const std::size_t dim = tensor_dimension(1, 2);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<SparseRationalMatrix::Triplet> back;
    for (const auto& t : phi.triplets())
      if (t.col == j) back.push_back({t.row / dim, t.row % dim, t.value});
    CHECK(SparseRationalMatrix(dim, dim, back) == diagram_matrix(basis.at(j), 1));
  }
}

TEST_CASE("annihilator dimensions") {
  CHECK(annihilator_basis(1, 2).dimension() == 1);
  CHECK(annihilator_basis(1, 3).dimension() == 14);
  CHECK(annihilator_basis(2, 3).dimension() == 1);
  CHECK(annihilator_basis(3, 3).dimension() == 0);
  for (const auto& v : annihilator_basis(1, 3).rows())
    CHECK(element_matrix(AlgebraElement::from_vector(3, v), 1).is_zero());
}

TEST_CASE("kernel contains the ideal generated by the top anti-symmetrizer") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m < n && m <= 2; ++m) {
      const SpanBasis a = annihilator_basis(m, n);
      CHECK(is_closed_under_generators(a, n));
      const AlgebraElement y = Y_top(m + 1, n);
      const auto all = enumerate(n);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int k = 0; k < 40; ++k) {
        const AlgebraElement v = mul(mul(all[pick(rng)], y), all[pick(rng)]);
        CHECK(a.contains(v.to_vector()));
      }
    }
}

TEST_CASE("size cap") {
  CHECK(phi_cells(1, 2) == 16);
  CHECK_THROWS_AS(phi_matrix(9, 4, SizeCap{1000}), SizeCapError);
  CHECK_THROWS_AS(diagram_matrix(RookDiagram::identity(8), 9), SizeCapError);
  CHECK_NOTHROW(phi_matrix(1, 2, SizeCap{16}));
  CHECK_THROWS_AS(phi_matrix(1, 2, SizeCap{15}), SizeCapError);
  try {
    phi_matrix(9, 9);
  } catch (const SizeCapError& e) {
    CHECK(std::string(e.what()).find("m=9, n=9") != std::string::npos);
  }
  CHECK(phi_cells(99, 99) == std::numeric_limits<std::uint64_t>::max());
}
