#pragma once

#include <map>
#include <string>
#include <vector>

#include "rook/diagram.hpp"
#include "rook/linalg.hpp"
#include "rook/rational.hpp"
#include "rook/tableau.hpp"

namespace rook {

/// Element of the rook monoid algebra FR_n: a finitely supported map from
/// diagrams to rationals. Zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<RookDiagram, Rational>;

  AlgebraElement() = default;
  explicit AlgebraElement(int n);
  /// c times the basis element of d.
  static AlgebraElement basis(const RookDiagram& d, const Rational& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const RookDiagram& d) const;

  /// Adds c to the coefficient of d.
  void add_term(const RookDiagram& d, const Rational& c);

  /// Coordinates in the canonical diagram order of DiagramBasis::of(n).
  SparseVector to_vector() const;
  static AlgebraElement from_vector(int n, const SparseVector& v);

  AlgebraElement& operator+=(const AlgebraElement& b);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int n_ = 0;
  Terms terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Rational& c, const AlgebraElement& a);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);

/// Bilinear extension of diagram multiplication. Term pairs are split over
/// OpenMP threads; partial sums are exact, so the result matches serial::mul.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul(const RookDiagram& d, const AlgebraElement& a);
AlgebraElement mul(const AlgebraElement& a, const RookDiagram& d);

/// star applied termwise.
AlgebraElement star_elem(const AlgebraElement& a);

/// A subset S of {1..n}; diagrams of R_S act as the identity off S.
class VertexSubset {
 public:
  /// Throws std::invalid_argument for members outside {1..n} or repeats.
  VertexSubset(int n, std::vector<int> members);
  static VertexSubset prefix(int k, int n);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int v) const;

 private:
  int n_;
  std::vector<int> members_;  // sorted
};

/// Transports d in R_{|S|} to R_S inside R_n by the order-preserving
/// relabelling {1..|S|} -> S.
RookDiagram embed(const RookDiagram& d, const VertexSubset& s);

/// Rd_S[r]: diagrams of R_n that are the identity off S and have r isolated
/// vertices per row inside S.
std::vector<RookDiagram> subset_rank_class(const VertexSubset& s, int r);

/// Symmetrizer of R_S:
///   sum of all permutations of S + sum_{r>=1} (-1)^r r! (sum of Rd_S[r]).
/// Throws std::invalid_argument for empty S.
AlgebraElement symmetrizer_X(const VertexSubset& s);
/// Same element built straight from Rd_S inside R_n, without relabelling.
AlgebraElement symmetrizer_X_direct(const VertexSubset& s);

/// Anti-symmetrizer of R_S:
///   sum of sgn(w) w over permutations of S + sum over Rd_S[1] of sgn(D) D,
/// signs computed in the relabelled copy R_{|S|}.
AlgebraElement antisymmetrizer_Y(const VertexSubset& s);

/// The all-isolated diagram p_1 p_2 ... p_n.
AlgebraElement full_projector(int n);

/// Product of p_i over the given vertices (the identity for an empty list).
AlgebraElement projector_product(int n, const std::vector<int>& vertices);

/// Y over each column, X over each row, then p_i for i outside the content;
/// multiplied left to right. Returns the full projector for the empty shape.
AlgebraElement quasi_idempotent_e(const Tableau& t);

/// Anti-symmetrizer on {1..k} viewed inside FR_n. Throws std::out_of_range
/// unless 1 <= k <= n.
AlgebraElement Y_top(int k, int n);

std::string to_string(const AlgebraElement& a);

}  // namespace rook
