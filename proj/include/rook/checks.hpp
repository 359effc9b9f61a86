#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rook/serialize.hpp"
#include "rook/tensor.hpp"

namespace rook {

struct Assertion {
  std::string name;
  bool pass = false;
  json witness;  // null when there is nothing to show
};

/// Machine-readable outcome of one check:
/// {"check": name, "params": {...}, "assertions": [{"name", "pass", "witness"}]}.
struct Report {
  std::string check;
  json params = json::object();
  std::vector<Assertion> assertions;

  void add(std::string name, bool pass, json witness = nullptr);
  bool ok() const;
  json to_json() const;
};

/// Shared knobs. `exhaustive` disables every sampling fallback.
struct CheckOptions {
  bool exhaustive = false;
  std::uint64_t seed = 20240601;
  SizeCap cap;
};

/// Enumeration sizes against sum_r C(n,r)^2 r!, per rank class too.
Report check_counting(int n_max);
/// Relation families plus closure of the generators to all of R_n.
Report check_presentation(int n);
/// Round trip for every diagram; exhaustive quadruple search when n <= 4.
Report check_factorization(int n);
/// Symmetrizer, anti-symmetrizer and full projector each generate a
/// one-dimensional ideal and obey their generator eigen-equations.
Report check_one_dimensional_ideals(int n);
/// element_matrix respects products: every diagram pair for n <= 3 (or
/// when exhaustive), otherwise `samples` seeded random pairs.
Report check_homomorphism(int m, int n, const CheckOptions& opt = {}, int samples = 1000);
/// m >= n: phi has full column rank.
Report check_phi_injective(int m, int n, const CheckOptions& opt = {});
/// m < n: the kernel of phi equals the ideal generated by the top
/// anti-symmetrizer on m+1 vertices, with the dimension predicted by Specht
/// modules of length at least m+1.
Report check_annihilator(int m, int n, const CheckOptions& opt = {});
/// The top anti-symmetrizer on m+1 vertices acts as zero on U^{xn}.
Report check_top_kills_tensor(int m, int n, const CheckOptions& opt = {});
/// Y_{m+1} e(t_lambda) = (m+1)! e(t_lambda) whenever lambda has at least
/// m+1 rows.
Report check_top_absorbs(int m, int n);
/// The blocks generated by e(t^lambda) have dimension (dim R^lambda)^2, sum
/// to |R_n|, span FR_n and multiply to zero pairwise (sampled for n > 3
/// unless exhaustive).
Report check_block_decomposition(int n, const CheckOptions& opt = {});
/// e(t) kills R^mu for mu != lambda and not R^lambda itself. Every tableau
/// t for n <= 3 (or when exhaustive), else t in {t^lambda, t_lambda}.
Report check_quasi_idempotent_kills(int n, const CheckOptions& opt = {});
/// Sum of (dim R^lambda)^2 over lambda with |lambda| <= n equals |R_n|.
Report check_specht_square_sum(int n);

struct AggregateReport {
  std::vector<Report> reports;
  bool ok() const;
  json to_json() const;
};

/// Runs every check up to the given sizes. Throws SizeCapError before doing
/// any work when (m_max+1)^(2 n_max) exceeds the cap.
AggregateReport verify_all(int n_max, int m_max, const CheckOptions& opt = {});

}  // namespace rook
