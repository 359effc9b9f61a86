#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rook/serialize.hpp"
#include "rook/specht.hpp"

using namespace rook;

namespace {

Tableau tab(std::vector<int> shape, int n, std::vector<std::vector<int>> rows) {
  return Tableau(Partition(std::move(shape)), n, std::move(rows));
}

TabloidVector negate(TabloidVector v) {
  for (auto& [x, c] : v) c = -c;
  return v;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  CHECK(partitions_of(5).size() == 7);
  for (int r = 0; r <= 7; ++r) {
    const auto ours = partitions_of(r);
    const auto ref = oracle::partitions(r);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i].parts() == ref[i]);
  }
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK(parse_partition("0").empty());
  CHECK(parse_partition("empty").empty());
}

TEST_CASE("canonical tableaux") {
  const Tableau row = canonical_tableau_row(Partition({2, 1}), 3);
  CHECK(row.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  const Tableau col = canonical_tableau_col(Partition({2, 1}), 3);
  CHECK(col.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(canonical_tableau_row(Partition({1, 1}), 2) == canonical_tableau_col(Partition({1, 1}), 2));
  CHECK(canonical_tableau_row(Partition({1, 1}), 2).column(0) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(canonical_tableau_row(Partition({3}), 2), std::invalid_argument);
  CHECK_THROWS_AS(tab({2}, 3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(tab({2}, 3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("action on tableaux") {
  const Tableau t = tab({1}, 2, {{1}});
  CHECK_FALSE(act_on_tableau({0, 2}, t).has_value());
  CHECK(act_on_tableau(RookDiagram::identity(2), t) == t);
  // [0,1] has the single edge from top 2 to bottom 1.
  const auto moved = act_on_tableau({0, 1}, t);
  REQUIRE(moved.has_value());
  CHECK(moved->entry(0, 0) == 2);
  // Quadruple form by hand: d1 = s_1, d2 = id, sigma = id sends 1 to 2.
  CHECK(act_on_tableau_quadruple({0, 1}, t) == moved);
}

TEST_CASE("edge rule agrees with the quadruple rule") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : enumerate(n))
      for (int r = 0; r <= n; ++r)
        for (const auto& lam : partitions_of(r))
          for (const auto& t : all_tableaux(lam, n)) CHECK(act_on_tableau(d, t) == act_on_tableau_quadruple(d, t));
}

TEST_CASE("projectors on tabloids") {
  const int n = 3;
  for (const auto& lam : partitions_up_to(n))
    for (const auto& t : all_tableaux(lam, n)) {
      const Tabloid x = tabloid_of(t);
      const auto cont = t.content();
      for (int j = 1; j <= n; ++j) {
        const auto r = act_on_tabloid(generator(n, GeneratorKind::p, j), x);
        if (std::find(cont.begin(), cont.end(), j) == cont.end()) {
          REQUIRE(r.has_value());
          CHECK(*r == x);
        } else {
          CHECK_FALSE(r.has_value());
        }
      }
    }
}

TEST_CASE("module axiom") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& lam : partitions_up_to(n))
      for (const auto& t : all_tableaux(lam, n)) {
        const TabloidVector v = polytabloid(t);
        for (int k = 0; k < 3; ++k) {
          const RookDiagram a = all[pick(rng)], b = all[pick(rng)];
          const auto lhs = act_on_tabloid_vector(AlgebraElement::basis(a), act_on_tabloid_vector(AlgebraElement::basis(b), v));
          const auto rhs = act_on_tabloid_vector(AlgebraElement::basis(multiply(a, b)), v);
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("polytabloids") {
  const Tableau row2 = tab({2}, 2, {{1, 2}});
  const auto e2 = polytabloid(row2);
  CHECK(e2.size() == 1);
  CHECK(e2.begin()->first == tabloid_of(row2));

  const Tableau col = tab({1, 1}, 2, {{1}, {2}});
  const auto e11 = polytabloid(col);
  const Partition p11({1, 1});
  TabloidVector expected;
  accumulate(expected, Tabloid(p11, 2, {{1}, {2}}), 1);
  accumulate(expected, Tabloid(p11, 2, {{2}, {1}}), -1);
  CHECK(e11 == expected);

  const auto empty = polytabloid(canonical_tableau_row(Partition(), 3));
  CHECK(empty.size() == 1);
  CHECK(empty.begin()->second == 1);

  for (int r = 1; r <= 4; ++r)
    for (const auto& lam : partitions_of(r)) {
      std::uint64_t expected_terms = 1;
      for (int c : lam.column_lengths()) expected_terms *= oracle::factorial(c);
      const Tableau t = canonical_tableau_row(lam, 4);
      const auto e = polytabloid(t);
      CHECK(e.size() == expected_terms);
      for (const auto& [x, c] : e) CHECK(x.content() == t.content());
    }
}

TEST_CASE("polytabloids map to signed polytabloids") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : partitions_up_to(n)) {
      const auto tableaux = all_tableaux(lam, n);
      std::vector<TabloidVector> polys;
      for (const auto& s : tableaux) polys.push_back(polytabloid(s));
      for (const auto& d : enumerate(n))
        for (std::size_t i = 0; i < tableaux.size(); ++i) {
          const auto image = act_on_tabloid_vector(AlgebraElement::basis(d), polys[i]);
          if (!act_on_tableau(d, tableaux[i])) {
            CHECK(image.empty());
            continue;
          }
          bool found = false;
          for (const auto& e : polys) found = found || e == image || negate(e) == image;
          CHECK(found);
        }
    }
}

TEST_CASE("Specht dimensions") {
  CHECK(specht_dimension(Partition({1}), 2) == 2);
  // Oracle: the two polytabloids {1}, {2} in M^(1) are independent.
  CHECK(oracle::dense_rank({{1, 0}, {0, 1}}) == 2);
  for (int n = 1; n <= 4; ++n) CHECK(specht_dimension(Partition(), n) == 1);
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t total = 0;
    for (const auto& lam : partitions_up_to(n)) {
      const std::size_t d = specht_dimension(lam, n);
      CHECK(d == oracle::binomial(n, lam.size()) * oracle::hook_length_count(lam.parts()));
      CHECK(d == oracle::binomial(n, lam.size()) * specht_dimension(lam, lam.size()));
      total += d * d;
    }
    std::uint64_t order = 0;
    for (int r = 0; r <= n; ++r) order += oracle::binomial(n, r) * oracle::binomial(n, r) * oracle::factorial(r);
    CHECK(total == order);
  }
  CHECK_THROWS_AS(specht_dimension(Partition({3}), 2), std::invalid_argument);
}

TEST_CASE("Specht module coordinates") {
  const SpechtModule m = specht_module(Partition({2, 1}), 3);
  CHECK(std::is_sorted(m.coords.begin(), m.coords.end()));
  CHECK(m.basis.ambient_dimension() == m.coords.size());
  CHECK(m.basis.dimension() == 2);
  for (const auto& t : all_tableaux(m.shape, 3)) CHECK(m.basis.contains(m.coordinates(polytabloid(t))));
}

TEST_CASE("tableau and tabloid JSON") {
  const Tableau t = canonical_tableau_col(Partition({2, 1}), 3);
  CHECK(to_json(t).dump() == R"({"shape":[2,1],"n":3,"rows":[[1,3],[2]]})");
  const Tabloid x(Partition({2, 1}), 3, {{3, 1}, {2}});
  CHECK(to_json(x).dump() == "[[1,3],[2]]");
}
