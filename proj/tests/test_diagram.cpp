#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "rook/diagram.hpp"

using namespace rook;

namespace {
RookDiagram s(int n, int i) { return generator(n, GeneratorKind::s, i); }
RookDiagram p(int n, int i) { return generator(n, GeneratorKind::p, i); }
}  // namespace

TEST_CASE("identity diagram") {
  CHECK(RookDiagram::identity(2) == RookDiagram{1, 2});
  CHECK(RookDiagram::identity(4).rank() == 4);
  for (const auto& d : enumerate(3)) CHECK(multiply(RookDiagram::identity(3), d) == d);
}

TEST_CASE("generators") {
  CHECK(s(2, 1) == RookDiagram{2, 1});
  CHECK(p(2, 1) == RookDiagram{0, 2});
  CHECK(p(3, 2) == RookDiagram{1, 0, 3});
  CHECK_THROWS_AS(s(3, 3), std::out_of_range);
  CHECK_THROWS_AS(s(3, 0), std::out_of_range);
  CHECK_THROWS_AS(p(3, 4), std::out_of_range);
  CHECK(generators(3).size() == 5);
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS((RookDiagram{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS((RookDiagram{3, 0}), std::invalid_argument);
  CHECK_THROWS_AS((RookDiagram{-1, 0}), std::invalid_argument);
  CHECK_THROWS(RookDiagram(std::vector<int>{}));
  const RookDiagram d{0, 1};
  CHECK(d.to_string() == "[0,1]");
  CHECK(d.isolated_top() == std::vector<int>{1});
  CHECK(d.isolated_bottom() == std::vector<int>{2});
}

TEST_CASE("multiplication concatenates edges") {
  // Edge sets by hand: p_1 = {2-2}, s_1 = {1-2, 2-1}; composite keeps 2 -> 2 -> 1.
  CHECK(multiply({0, 2}, {2, 1}) == RookDiagram{0, 1});
  const RookDiagram lhs = multiply(multiply({0, 2}, {2, 1}), {0, 2});
  CHECK(lhs == RookDiagram{0, 0});
  CHECK(lhs == multiply({0, 2}, {1, 0}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : enumerate(n)) CHECK(multiply(d, RookDiagram::identity(n)) == d);
  CHECK_THROWS_AS(multiply({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("multiplication agrees with composing partial maps") {
  for (int n = 1; n <= 3; ++n) {
    const auto maps = oracle::partial_injections(n);
    for (const auto& f : maps)
      for (const auto& g : maps) {
        const RookDiagram prod = multiply(RookDiagram(f), RookDiagram(g));
        CHECK(prod.images() == oracle::then(f, g));
        CHECK(prod.rank() <= std::min(RookDiagram(f).rank(), RookDiagram(g).rank()));
      }
  }
}

TEST_CASE("star is an involutive anti-automorphism") {
  CHECK(star({2, 1}) == RookDiagram{2, 1});
  CHECK(star({0, 2}) == RookDiagram{0, 2});
  CHECK(star({0, 1}) == RookDiagram{2, 0});
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate(n);
    for (const auto& a : all) {
      CHECK(star(star(a)) == a);
      for (const auto& b : all) CHECK(star(multiply(a, b)) == multiply(star(b), star(a)));
    }
  }
}

TEST_CASE("enumeration matches brute force") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate(n);
    const auto brute = oracle::partial_injections(n);
    REQUIRE(all.size() == brute.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].images() == brute[i]);
    std::uint64_t formula = 0;
    for (int r = 0; r <= n; ++r) formula += oracle::binomial(n, r) * oracle::binomial(n, r) * oracle::factorial(r);
    CHECK(all.size() == formula);
    CHECK(rook_monoid_order(n) == formula);
    std::size_t sum = 0;
    for (int r = 0; r <= n; ++r) {
      const auto cls = enumerate_rank_class(n, r);
      CHECK(cls.size() == oracle::binomial(n, r) * oracle::binomial(n, r) * oracle::factorial(n - r));
      CHECK(std::is_sorted(cls.begin(), cls.end()));
      sum += cls.size();
    }
    CHECK(sum == all.size());
  }
  CHECK(enumerate(2).size() == 7);
  CHECK(enumerate(3).size() == 34);
  CHECK(enumerate_rank_class(3, 1).size() == 18);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_rank_class(n, 0).size() == oracle::factorial(n));
  CHECK_THROWS_AS(enumerate_rank_class(3, 4), std::out_of_range);
}

TEST_CASE("diagram basis indexing") {
  for (int n = 1; n <= 4; ++n) {
    const auto& b = DiagramBasis::of(n);
    CHECK(&b == &DiagramBasis::of(n));
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b.at(i)) == i);
  }
  CHECK_THROWS_AS(DiagramBasis::of(3).index(RookDiagram{1, 2}), std::out_of_range);
}

TEST_CASE("distinguished coset representatives") {
  const auto reps = coset_reps(4, 2);
  std::size_t expected = 0;
  for (const auto& w : oracle::permutations(4))
    if (w[0] < w[1] && w[2] < w[3]) ++expected;
  CHECK(reps.size() == expected);
  CHECK(reps.size() == 6);
  int max_len = 0;
  for (const auto& w : reps) max_len = std::max(max_len, perm_length(w));
  CHECK(max_len == 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(coset_reps(n, 0) == std::vector<Permutation>{Permutation::identity(n)});
    for (int r = 0; r <= n; ++r) {
      CHECK(coset_reps(n, r).size() == oracle::binomial(n, r));
      int longest = 0;
      for (const auto& w : coset_reps(n, r)) longest = std::max(longest, perm_length(w));
      CHECK(longest == r * (n - r));
    }
  }
}

TEST_CASE("right permutation convention") {
  const Permutation v({2, 3, 1});
  const Permutation w({2, 1, 3});
  const Permutation vw = v * w;
  for (int i = 1; i <= 3; ++i) CHECK(vw(i) == w(v(i)));
  CHECK(multiply(v.to_diagram(), w.to_diagram()) == vw.to_diagram());
  CHECK(v.inverse() * v == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("factorization examples") {
  const Quadruple q1 = factorize({0, 2});
  CHECK(q1.d1 == Permutation::identity(2));
  CHECK(q1.d2 == Permutation::identity(2));
  CHECK(q1.r == 1);
  CHECK(q1.sigma == Permutation::identity(2));

  const Quadruple q2 = factorize({2, 0});
  const auto found = oracle::quadruples_for({2, 0});
  REQUIRE(found.size() == 1);
  CHECK(q2.d1.images() == found[0].d1);
  CHECK(q2.d2.images() == found[0].d2);
  CHECK(q2.sigma.images() == found[0].sigma);
  CHECK(q2.r == found[0].r);
  CHECK(q2.d1(1) == 2);
}

TEST_CASE("factorization round trip and uniqueness") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : enumerate(n)) CHECK(compose_quadruple(factorize(d)) == d);
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : enumerate(n)) {
      const auto found = oracle::quadruples_for(d.images());
      REQUIRE(found.size() == 1);
      const Quadruple q = factorize(d);
      CHECK(q.d1.images() == found[0].d1);
      CHECK(q.d2.images() == found[0].d2);
      CHECK(q.sigma.images() == found[0].sigma);
      CHECK(q.r == found[0].r);
    }
}

TEST_CASE("length and sign") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(diagram_sign(p(n, 1)) == -1);
    CHECK(diagram_sign(RookDiagram::identity(n)) == 1);
    CHECK(diagram_sign(RookDiagram(std::vector<int>(static_cast<std::size_t>(n), 0))) == (n % 2 == 0 ? 1 : -1));
  }
  for (const auto& w : all_permutations(4)) {
    CHECK(perm_length(w) == oracle::inversions(w.images()));
    CHECK(diagram_length(w.to_diagram()) == perm_length(w));
  }
  // Hand factorization: [2,0] and [0,1] both have sign +1.
  CHECK(diagram_sign({2, 0}) == 1);
  CHECK(diagram_sign({0, 1}) == 1);
  CHECK(diagram_sign({0, 2}) == -1);
  CHECK(diagram_sign({1, 0}) == -1);
}

TEST_CASE("sign is not multiplicative") {
  bool witness = false;
  const auto all = enumerate(2);
  for (const auto& a : all)
    for (const auto& b : all)
      if (diagram_sign(multiply(a, b)) != diagram_sign(a) * diagram_sign(b)) witness = true;
  CHECK(witness);
}

TEST_CASE("presentation relations") {
  for (int n = 2; n <= 5; ++n) {
    const auto rep = verify_presentation(n);
    CHECK(rep.ok());
    CHECK(rep.instances_checked > 0);
  }
  CHECK_THROWS(verify_presentation(1));
}

TEST_CASE("presentation check rejects a wrong product") {
  // Unmatched vertices fall through unchanged instead of becoming isolated.
  const MultiplyFn broken = [](const RookDiagram& a, const RookDiagram& b) {
    std::vector<int> img(static_cast<std::size_t>(a.n()));
    std::vector<bool> used(static_cast<std::size_t>(a.n()) + 1, false);
    for (int i = 1; i <= a.n(); ++i) {
      const int mid = a.img(i);
      int out = mid == 0 ? 0 : b.img(mid);
      if (mid != 0 && out == 0) out = mid;
      if (out != 0 && used[static_cast<std::size_t>(out)]) out = 0;
      if (out != 0) used[static_cast<std::size_t>(out)] = true;
      img[static_cast<std::size_t>(i - 1)] = out;
    }
    return RookDiagram(img);
  };
  const auto rep = verify_presentation(2, broken);
  CHECK_FALSE(rep.ok());
  bool hit = false;
  for (const auto& f : rep.failures) hit = hit || f.family == "p_is_ip_i=p_ip_{i+1}";
  CHECK(hit);
}
