#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rook {

/// Largest supported number of vertices per row. Keeps a diagram packable
/// into a single 64-bit key (4 bits per vertex).
inline constexpr int kMaxN = 15;

/// A rook n-diagram stored as its top-to-bottom image list.
///
/// `img(a) == b > 0` means top vertex a is joined to bottom vertex b;
/// `img(a) == 0` means top vertex a is isolated. Vertices are 1-based.
/// Ordering is lexicographic on the image list (after n).
class RookDiagram {
 public:
  RookDiagram() = default;

  /// Validates: 1 <= n <= kMaxN, entries in [0, n], nonzero entries distinct.
  explicit RookDiagram(std::span<const int> img);
  RookDiagram(std::initializer_list<int> img)
      : RookDiagram(std::span<const int>(img.begin(), img.size())) {}

  static RookDiagram identity(int n);

  int n() const { return n_; }
  int img(int a) const { return img_[static_cast<std::size_t>(a - 1)]; }
  std::vector<int> images() const;

  /// Number of edges.
  int rank() const;
  /// Number of isolated vertices in each row, n - rank.
  int isolated_count() const { return n_ - rank(); }

  /// Sorted isolated vertices of the top / bottom rows.
  std::vector<int> isolated_top() const;
  std::vector<int> isolated_bottom() const;

  bool is_permutation() const { return rank() == n_; }

  /// Packed key; numeric order of keys agrees with the canonical order for
  /// diagrams of equal n.
  std::uint64_t key() const;

  std::string to_string() const;

  friend auto operator<=>(const RookDiagram&, const RookDiagram&) = default;
  friend bool operator==(const RookDiagram&, const RookDiagram&) = default;

 private:
  friend RookDiagram multiply(const RookDiagram&, const RookDiagram&);
  friend RookDiagram star(const RookDiagram&);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxN> img_{};
};

/// A right permutation of {1..n}: (i)w = images[i-1], composition
/// (i)(vw) = ((i)v)w.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Requires a rank-n diagram.
  static Permutation from_diagram(const RookDiagram& d);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  RookDiagram to_diagram() const;

  /// Inversion count; equals the length of any reduced word.
  int length() const;
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Right-permutation product vw.
Permutation operator*(const Permutation& v, const Permutation& w);

/// D = d1^{-1} p_1...p_r sigma d2 with d1, d2 distinguished coset
/// representatives and sigma fixing {1..r} pointwise.
struct Quadruple {
  Permutation d1;
  Permutation d2;
  int r = 0;
  Permutation sigma;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

enum class GeneratorKind { s, p };

/// s_i (1 <= i <= n-1) or p_i (1 <= i <= n). Throws std::out_of_range.
RookDiagram generator(int n, GeneratorKind kind, int i);

/// The generating set s_1..s_{n-1}, p_1..p_n in that order.
std::vector<RookDiagram> generators(int n);

/// Concatenation: bottom row of a identified with top row of b.
RookDiagram multiply(const RookDiagram& a, const RookDiagram& b);

/// Inverse partial injection; the anti-automorphism fixing every generator.
RookDiagram star(const RookDiagram& d);

/// All diagrams of R_n in canonical order.
std::vector<RookDiagram> enumerate(int n);
/// Rd_n[r]: diagrams with exactly r isolated vertices per row.
std::vector<RookDiagram> enumerate_rank_class(int n, int r);

/// Sum over r of C(n,r)^2 r!.
std::uint64_t rook_monoid_order(int n);
std::uint64_t rank_class_size(int n, int r);

/// Distinguished right coset representatives of S_r x S_{n-r}.
std::vector<Permutation> coset_reps(int n, int r);
bool is_coset_rep(const Permutation& w, int r);

/// All permutations of {1..n} in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

Quadruple factorize(const RookDiagram& d);
RookDiagram compose_quadruple(const Quadruple& q);

int perm_length(const Permutation& w);
int diagram_length(const RookDiagram& d);
int diagram_sign(const RookDiagram& d);

/// Canonical coordinates for the diagram basis of FR_n. Instances are built
/// once per n and shared.
class DiagramBasis {
 public:
  static const DiagramBasis& of(int n);

  int n() const { return n_; }
  std::size_t size() const { return diagrams_.size(); }
  const std::vector<RookDiagram>& diagrams() const { return diagrams_; }
  const RookDiagram& at(std::size_t i) const { return diagrams_[i]; }
  /// Throws std::out_of_range for a diagram of another n.
  std::size_t index(const RookDiagram& d) const;

  explicit DiagramBasis(int n);

 private:
  int n_;
  std::vector<RookDiagram> diagrams_;
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted_keys_;
};

using MultiplyFn = std::function<RookDiagram(const RookDiagram&, const RookDiagram&)>;

struct RelationFailure {
  std::string family;
  std::string instance;
};

struct PresentationReport {
  int n = 0;
  std::size_t instances_checked = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the eight relation families of the Coxeter-style presentation of
/// R_n under the supplied product (defaults to `multiply`).
PresentationReport verify_presentation(int n, const MultiplyFn& mul = multiply);

}  // namespace rook

template <>
struct std::hash<rook::RookDiagram> {
  std::size_t operator()(const rook::RookDiagram& d) const noexcept {
    return std::hash<std::uint64_t>{}(d.key() ^ (static_cast<std::uint64_t>(d.n()) << 60));
  }
};
