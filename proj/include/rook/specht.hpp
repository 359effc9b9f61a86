#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rook/algebra.hpp"
#include "rook/diagram.hpp"
#include "rook/linalg.hpp"
#include "rook/tableau.hpp"

namespace rook {

/// Row-equivalence class of a tableau. Each row is kept sorted, so two
/// tabloids are equal iff their row sets agree.
class Tabloid {
 public:
  Tabloid() = default;
  /// Sorts each row. Throws std::invalid_argument if the rows do not fit
  /// the shape or repeat an entry.
  Tabloid(Partition shape, int n, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> content() const;

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
  friend bool operator==(const Tabloid&, const Tabloid&) = default;

 private:
  Partition shape_;
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
};

Tabloid tabloid_of(const Tableau& t);

/// Element of M^lambda. Zero coefficients are never stored.
using TabloidVector = std::map<Tabloid, Rational>;

/// Adds c * {x} to v, dropping the entry if it cancels.
void accumulate(TabloidVector& v, const Tabloid& x, const Rational& c);

/// Entry b of t becomes the top vertex a joined to bottom vertex b. Returns
/// nullopt (the zero vector) when some entry is an isolated bottom vertex.
std::optional<Tableau> act_on_tableau(const RookDiagram& d, const Tableau& t);
/// Same action evaluated through factorize(d): entry (j)d2 becomes
/// (j)sigma^{-1}d1, and the result is zero if (i)d2 lies in the content for
/// some i <= r.
std::optional<Tableau> act_on_tableau_quadruple(const RookDiagram& d, const Tableau& t);

std::optional<Tabloid> act_on_tabloid(const RookDiagram& d, const Tabloid& x);
/// Linear extension to FR_n acting on M^lambda.
TabloidVector act_on_tabloid_vector(const AlgebraElement& a, const TabloidVector& v);

/// Permutations preserving every column of t as a set, with their signs.
std::vector<std::pair<Permutation, int>> column_stabilizer(const Tableau& t);

/// Signed sum over the column stabilizer of t acting on {t}. For the empty
/// shape this is the empty tabloid with coefficient 1.
TabloidVector polytabloid(const Tableau& t);

/// The span of all polytabloids of shape lambda with entries in {1..n}.
/// Coordinates index only the tabloids that occur, in canonical order.
struct SpechtModule {
  Partition shape;
  int n = 0;
  std::vector<Tabloid> coords;
  SpanBasis basis;

  /// Coordinates of v. Throws std::invalid_argument if v uses a tabloid
  /// outside `coords`.
  SparseVector coordinates(const TabloidVector& v) const;
};

/// Throws std::invalid_argument when |lambda| > n.
SpechtModule specht_module(const Partition& shape, int n);
SpanBasis specht_basis(const Partition& shape, int n);
std::size_t specht_dimension(const Partition& shape, int n);

}  // namespace rook
