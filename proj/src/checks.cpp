#include "rook/checks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <unordered_set>

#include "rook/ideals.hpp"
#include "rook/specht.hpp"

namespace rook {

void Report::add(std::string name, bool pass, json witness) {
  assertions.push_back({std::move(name), pass, std::move(witness)});
}

bool Report::ok() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

json Report::to_json() const {
  json as = json::array();
  for (const auto& a : assertions) as.push_back({{"name", a.name}, {"pass", a.pass}, {"witness", a.witness}});
  return json{{"check", check}, {"params", params}, {"assertions", std::move(as)}};
}

bool AggregateReport::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

json AggregateReport::to_json() const {
  json summary = json::array();
  json all = json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    std::size_t passed = 0;
    for (const auto& a : r.assertions) passed += a.pass ? 1 : 0;
    failed += r.assertions.size() - passed;
    summary.push_back({{"check", r.check},
                       {"params", r.params},
                       {"passed", passed},
                       {"total", r.assertions.size()},
                       {"pass", r.ok()}});
    all.push_back(r.to_json());
  }
  return json{{"pass", ok()}, {"failed_assertions", failed}, {"summary", std::move(summary)}, {"reports", std::move(all)}};
}

namespace {

std::size_t cached_specht_dimension(const Partition& shape, int n) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, std::size_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({shape, n});
    if (it != cache.end()) return it->second;
  }
  const std::size_t d = specht_dimension(shape, n);
  std::lock_guard<std::mutex> lock(mu);
  cache[{shape, n}] = d;
  return d;
}

std::string label(const Partition& p) { return "lambda=" + p.to_string(); }

}  // namespace

Report check_counting(int n_max) {
  Report rep{"counting", {{"n_max", n_max}}, {}};
  for (int n = 1; n <= n_max; ++n) {
    const auto all = enumerate(n);
    const std::uint64_t formula = rook_monoid_order(n);
    rep.add("order n=" + std::to_string(n), all.size() == formula,
            {{"enumerated", all.size()}, {"formula", formula}});
    std::uint64_t class_total = 0;
    bool classes_ok = true;
    json per_class = json::array();
    for (int r = 0; r <= n; ++r) {
      const auto cls = enumerate_rank_class(n, r);
      class_total += cls.size();
      classes_ok = classes_ok && cls.size() == rank_class_size(n, r) &&
                   std::all_of(cls.begin(), cls.end(), [r](const RookDiagram& d) { return d.isolated_count() == r; });
      per_class.push_back({{"r", r}, {"enumerated", cls.size()}, {"formula", rank_class_size(n, r)}});
    }
    rep.add("rank classes n=" + std::to_string(n), classes_ok && class_total == formula, per_class);
    rep.add("canonical order n=" + std::to_string(n), std::is_sorted(all.begin(), all.end()) &&
                                                          std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  return rep;
}

Report check_presentation(int n) {
  Report rep{"presentation", {{"n", n}}, {}};
  const auto pr = verify_presentation(n);
  json failures = json::array();
  for (const auto& f : pr.failures) failures.push_back({{"family", f.family}, {"instance", f.instance}});
  rep.add("relations hold (" + std::to_string(pr.instances_checked) + " instances)", pr.ok(), failures);

  std::unordered_set<RookDiagram> seen{RookDiagram::identity(n)};
  std::vector<RookDiagram> frontier{RookDiagram::identity(n)};
  const auto gens = generators(n);
  while (!frontier.empty()) {
    std::vector<RookDiagram> next;
    for (const auto& d : frontier)
      for (const auto& g : gens) {
        const RookDiagram e = multiply(d, g);
        if (seen.insert(e).second) next.push_back(e);
      }
    frontier = std::move(next);
  }
  rep.add("generators reach every diagram", seen.size() == rook_monoid_order(n),
          {{"reached", seen.size()}, {"order", rook_monoid_order(n)}});
  return rep;
}

Report check_factorization(int n) {
  Report rep{"factorization", {{"n", n}}, {}};
  json bad_round = nullptr, bad_shape = nullptr;
  for (const auto& d : enumerate(n)) {
    const Quadruple q = factorize(d);
    if (bad_round.is_null() && compose_quadruple(q) != d) bad_round = {{"diagram", to_json(d)}, {"quadruple", to_json(q)}};
    bool shape_ok = q.r == d.isolated_count() && is_coset_rep(q.d1, q.r) && is_coset_rep(q.d2, q.r);
    for (int i = 1; i <= q.r; ++i) shape_ok = shape_ok && q.sigma(i) == i;
    if (bad_shape.is_null() && !shape_ok) bad_shape = {{"diagram", to_json(d)}, {"quadruple", to_json(q)}};
  }
  rep.add("compose(factorize(D)) = D", bad_round.is_null(), bad_round);
  rep.add("quadruple invariants", bad_shape.is_null(), bad_shape);

  if (n <= 4) {
    std::map<RookDiagram, int> hits;
    for (int r = 0; r <= n; ++r) {
      const auto reps = coset_reps(n, r);
      std::vector<Permutation> sigmas;
      for (const auto& w : all_permutations(n)) {
        bool fixes = true;
        for (int i = 1; i <= r; ++i) fixes = fixes && w(i) == i;
        if (fixes) sigmas.push_back(w);
      }
      for (const auto& d1 : reps)
        for (const auto& d2 : reps)
          for (const auto& s : sigmas) ++hits[compose_quadruple({d1, d2, r, s})];
    }
    json witness = nullptr;
    for (const auto& [d, c] : hits)
      if (c != 1 && witness.is_null()) witness = {{"diagram", to_json(d)}, {"quadruples", c}};
    rep.add("exactly one quadruple per diagram", witness.is_null() && hits.size() == rook_monoid_order(n), witness);
  }
  return rep;
}

Report check_one_dimensional_ideals(int n) {
  Report rep{"one_dimensional_ideals", {{"n", n}}, {}};
  const auto all = VertexSubset::prefix(n, n);
  const AlgebraElement x = symmetrizer_X(all);
  const AlgebraElement y = antisymmetrizer_Y(all);
  const AlgebraElement p = full_projector(n);
  const AlgebraElement zero(n);

  rep.add("dim <X> = 1", two_sided_ideal(x).dimension() == 1);
  rep.add("dim <Y> = 1", two_sided_ideal(y).dimension() == 1);
  rep.add("dim <P> = 1", two_sided_ideal(p).dimension() == 1);

  auto eigen = [&](const std::string& name, const AlgebraElement& a, GeneratorKind kind, int count,
                   const AlgebraElement& expected_of_a) {
    json witness = nullptr;
    for (int i = 1; i <= count && witness.is_null(); ++i) {
      const RookDiagram g = generator(n, kind, i);
      if (mul(g, a) != expected_of_a || mul(a, g) != expected_of_a)
        witness = {{"generator", to_json(g)}, {"left", to_json(mul(g, a))}, {"right", to_json(mul(a, g))}};
    }
    rep.add(name, witness.is_null(), witness);
  };
  eigen("s_i X = X s_i = X", x, GeneratorKind::s, n - 1, x);
  eigen("p_j X = X p_j = 0", x, GeneratorKind::p, n, zero);
  eigen("s_i Y = Y s_i = -Y", y, GeneratorKind::s, n - 1, scale(-1, y));
  eigen("p_j Y = Y p_j = 0", y, GeneratorKind::p, n, zero);
  eigen("s_i P = P s_i = P", p, GeneratorKind::s, n - 1, p);
  eigen("p_j P = P p_j = P", p, GeneratorKind::p, n, p);
  return rep;
}

Report check_homomorphism(int m, int n, const CheckOptions& opt, int samples) {
  const bool exhaustive = opt.exhaustive || n <= 3;
  Report rep{"homomorphism", {{"m", m}, {"n", n}, {"mode", exhaustive ? "exhaustive" : "sampled"}}, {}};
  enforce_cap(m, n, opt.cap);
  const auto& basis = DiagramBasis::of(n);
  std::vector<SparseRationalMatrix> mats(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(basis.size()); ++i)
    mats[static_cast<std::size_t>(i)] = diagram_matrix(basis.at(static_cast<std::size_t>(i)), m, opt.cap);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int k = 0; k < samples; ++k) pairs.emplace_back(pick(rng), pick(rng));
    rep.params["samples"] = samples;
    rep.params["seed"] = opt.seed;
  }
  std::ptrdiff_t first_bad = -1;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
    const auto [a, b] = pairs[static_cast<std::size_t>(k)];
    const auto prod = basis.index(multiply(basis.at(a), basis.at(b)));
    if (mats[prod] != mats[a] * mats[b]) {
#pragma omp critical
      if (first_bad < 0 || k < first_bad) first_bad = k;
    }
  }
  json witness = nullptr;
  if (first_bad >= 0) {
    const auto [a, b] = pairs[static_cast<std::size_t>(first_bad)];
    witness = {{"a", to_json(basis.at(a))}, {"b", to_json(basis.at(b))}};
  }
  rep.add("phi(ab) = phi(a)phi(b) over " + std::to_string(pairs.size()) + " pairs", first_bad < 0, witness);
  return rep;
}

Report check_phi_injective(int m, int n, const CheckOptions& opt) {
  Report rep{"phi_injective", {{"m", m}, {"n", n}}, {}};
  const auto phi = phi_matrix(m, n, opt.cap);
  const std::size_t rk = rank(phi);
  const std::size_t order = DiagramBasis::of(n).size();
  rep.add("rank = |R_n|", rk == order, {{"rank", rk}, {"order", order}});
  rep.add("nullity = 0", order - rk == 0, {{"nullity", order - rk}});
  return rep;
}

Report check_annihilator(int m, int n, const CheckOptions& opt) {
  Report rep{"annihilator", {{"m", m}, {"n", n}}, {}};
  const SpanBasis kernel = annihilator_basis(m, n, opt.cap);

  std::size_t predicted = 0, complement = 0;
  for (const auto& lam : partitions_up_to(n)) {
    const std::size_t d = cached_specht_dimension(lam, n);
    (lam.length() >= m + 1 ? predicted : complement) += d * d;
  }

  const IdealSpan ideal = two_sided_ideal(Y_top(m + 1, n), kernel.dimension());

  json outside = nullptr;
  for (const auto& row : ideal.basis.rows())
    if (!kernel.contains(row)) {
      outside = to_json(AlgebraElement::from_vector(n, row));
      break;
    }
  const std::size_t order = DiagramBasis::of(n).size();
  rep.params["dim_kernel"] = kernel.dimension();
  rep.params["dim_ideal"] = ideal.dimension();
  rep.params["specht_prediction"] = predicted;
  rep.add("ideal inside kernel", outside.is_null(), outside);
  rep.add("dim kernel = specht prediction", kernel.dimension() == predicted,
          {{"dim_kernel", kernel.dimension()}, {"predicted", predicted}});
  rep.add("rank phi = |R_n| - dim kernel = short-shape count", order - kernel.dimension() == complement,
          {{"rank", order - kernel.dimension()}, {"short_shapes", complement}});

  json missing = nullptr;
  for (const auto& row : kernel.rows())
    if (!ideal.basis.contains(row)) {
      missing = to_json(AlgebraElement::from_vector(n, row));
      break;
    }
  rep.add("kernel equals ideal", missing.is_null() && span_equal(kernel, ideal.basis),
          {{"dim_kernel", kernel.dimension()}, {"dim_ideal", ideal.dimension()}, {"kernel_vector_outside", missing}});
  return rep;
}

Report check_top_kills_tensor(int m, int n, const CheckOptions& opt) {
  Report rep{"top_kills_tensor", {{"m", m}, {"n", n}}, {}};
  const auto mat = element_matrix(Y_top(m + 1, n), m, opt.cap);
  json witness = nullptr;
  if (!mat.is_zero()) {
    const auto& t = mat.triplets().front();
    witness = {{"row", t.row}, {"col", t.col}, {"value", format_rational(t.value)}};
  }
  rep.add("phi(Y_{m+1}) = 0", mat.is_zero(), witness);
  return rep;
}

Report check_top_absorbs(int m, int n) {
  Report rep{"top_absorbs", {{"m", m}, {"n", n}}, {}};
  const AlgebraElement top = Y_top(m + 1, n);
  const Rational factor = factorial_q(m + 1);
  for (const auto& lam : partitions_up_to(n)) {
    if (lam.length() < m + 1) continue;
    const AlgebraElement e = quasi_idempotent_e(canonical_tableau_col(lam, n));
    const AlgebraElement lhs = mul(top, e);
    const AlgebraElement rhs = scale(factor, e);
    json witness = nullptr;
    if (lhs != rhs) witness = {{"difference", to_json(lhs - rhs)}};
    rep.add("Y e(t_lambda) = (m+1)! e(t_lambda), " + label(lam), lhs == rhs, witness);
  }
  return rep;
}

Report check_block_decomposition(int n, const CheckOptions& opt) {
  const bool exhaustive = opt.exhaustive || n <= 3;
  Report rep{"block_decomposition", {{"n", n}, {"products", exhaustive ? "exhaustive" : "sampled"}}, {}};
  const auto shapes = partitions_up_to(n);
  std::vector<IdealSpan> blocks(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(shapes.size()); ++i)
    blocks[static_cast<std::size_t>(i)] = block_ideal(shapes[static_cast<std::size_t>(i)], n);

  const std::size_t order = DiagramBasis::of(n).size();
  std::size_t total = 0;
  SpanBasis all(order);
  json dims = json::object();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const std::size_t d = cached_specht_dimension(shapes[i], n);
    const std::size_t dim = blocks[i].dimension();
    dims[shapes[i].to_string()] = dim;
    rep.add("dim I = (dim R)^2, " + label(shapes[i]), dim == d * d, {{"dim_block", dim}, {"dim_specht", d}});
    total += dim;
    for (const auto& row : blocks[i].basis.rows()) all.insert(row);
  }
  rep.add("sum of block dimensions = |R_n|", total == order, {{"sum", total}, {"order", order}, {"blocks", dims}});
  rep.add("blocks span FR_n", all.dimension() == order, {{"span", all.dimension()}});

  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const IdealSpan other = two_sided_ideal(quasi_idempotent_e(canonical_tableau_col(shapes[i], n)));
    rep.add("row and column canonical tableaux give one block, " + label(shapes[i]),
            span_equal(blocks[i].basis, other.basis));
  }

  // Representatives per block: every basis row, or a seeded sample.
  std::mt19937_64 rng(opt.seed);
  const std::size_t per_block = exhaustive ? 0 : 2;
  std::vector<std::vector<AlgebraElement>> reps(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    auto rows = blocks[i].basis.rows();
    if (per_block > 0 && rows.size() > per_block) {
      std::shuffle(rows.begin(), rows.end(), rng);
      rows.resize(per_block);
    }
    for (const auto& r : rows) reps[i].push_back(AlgebraElement::from_vector(n, r));
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < shapes.size(); ++j)
      if (i != j)
        for (std::size_t a = 0; a < reps[i].size(); ++a)
          for (std::size_t b = 0; b < reps[j].size(); ++b) jobs.emplace_back(i, j, a, b);
  std::ptrdiff_t first_bad = -1;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(jobs.size()); ++k) {
    const auto [i, j, a, b] = jobs[static_cast<std::size_t>(k)];
    if (!mul(reps[i][a], reps[j][b]).is_zero()) {
#pragma omp critical
      if (first_bad < 0 || k < first_bad) first_bad = k;
    }
  }
  json witness = nullptr;
  if (first_bad >= 0) {
    const auto [i, j, a, b] = jobs[static_cast<std::size_t>(first_bad)];
    witness = {{"lambda", shapes[i].to_string()}, {"mu", shapes[j].to_string()}, {"x", to_json(reps[i][a])},
               {"y", to_json(reps[j][b])}};
  }
  rep.params["product_pairs"] = jobs.size();
  rep.add("products across distinct blocks vanish", first_bad < 0, witness);
  return rep;
}

Report check_quasi_idempotent_kills(int n, const CheckOptions& opt) {
  const bool all_t = opt.exhaustive || n <= 3;
  Report rep{"quasi_idempotent_kills", {{"n", n}, {"tableaux", all_t ? "all" : "canonical"}}, {}};
  const auto shapes = partitions_up_to(n);

  std::vector<std::vector<std::pair<Tableau, TabloidVector>>> polys(shapes.size());
  for (std::size_t k = 0; k < shapes.size(); ++k)
    for (const auto& s : all_tableaux(shapes[k], n)) polys[k].emplace_back(s, polytabloid(s));

  for (std::size_t li = 0; li < shapes.size(); ++li) {
    const Partition& lam = shapes[li];
    const Tableau t_row = canonical_tableau_row(lam, n);
    std::vector<Tableau> ts;
    if (all_t) {
      ts = all_tableaux(lam, n);
    } else {
      ts = {t_row, canonical_tableau_col(lam, n)};
      if (ts[1] == ts[0]) ts.pop_back();
    }
    std::vector<json> kill_fail(ts.size());
    std::vector<char> own_nonzero(ts.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t ti = 0; ti < static_cast<std::ptrdiff_t>(ts.size()); ++ti) {
      const Tableau& t = ts[static_cast<std::size_t>(ti)];
      const AlgebraElement e = quasi_idempotent_e(t);
      for (std::size_t mi = 0; mi < shapes.size(); ++mi)
        for (const auto& [s, poly] : polys[mi]) {
          const bool zero = act_on_tabloid_vector(e, poly).empty();
          if (mi == li) {
            if (!zero) own_nonzero[static_cast<std::size_t>(ti)] = 1;
          } else if (!zero && kill_fail[static_cast<std::size_t>(ti)].is_null()) {
            kill_fail[static_cast<std::size_t>(ti)] = {{"t", to_json(t)}, {"s", to_json(s)}};
          }
        }
    }
    json witness = nullptr;
    for (const auto& w : kill_fail)
      if (!w.is_null()) {
        witness = w;
        break;
      }
    rep.add("e(t) R^mu = 0 for mu != lambda, " + label(lam) + " (" + std::to_string(ts.size()) + " tableaux)",
            witness.is_null(), witness);
    const auto it = std::find(ts.begin(), ts.end(), t_row);
    rep.add("e(t^lambda) R^lambda != 0, " + label(lam), own_nonzero[static_cast<std::size_t>(it - ts.begin())] != 0);
  }
  return rep;
}

Report check_specht_square_sum(int n) {
  Report rep{"specht_square_sum", {{"n", n}}, {}};
  std::size_t total = 0;
  json dims = json::object();
  for (const auto& lam : partitions_up_to(n)) {
    const std::size_t d = cached_specht_dimension(lam, n);
    dims[lam.to_string()] = d;
    total += d * d;
  }
  rep.add("sum (dim R^lambda)^2 = |R_n|", total == rook_monoid_order(n),
          {{"sum", total}, {"order", rook_monoid_order(n)}, {"dims", dims}});
  return rep;
}

AggregateReport verify_all(int n_max, int m_max, const CheckOptions& opt) {
  if (n_max < 1 || m_max < 1) throw std::invalid_argument("verify_all: n and m must be at least 1");
  if (n_max > kMaxN) throw SizeCapError("size cap: n=" + std::to_string(n_max) + " exceeds the largest supported n (" +
                                        std::to_string(kMaxN) + ")");
  enforce_cap(m_max, n_max, opt.cap);

  AggregateReport out;
  auto& r = out.reports;
  r.push_back(check_counting(n_max));
  for (int n = 2; n <= n_max; ++n) r.push_back(check_presentation(n));
  for (int n = 1; n <= n_max; ++n) r.push_back(check_factorization(n));
  for (int n = 2; n <= n_max; ++n) r.push_back(check_one_dimensional_ideals(n));
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) r.push_back(check_homomorphism(m, n, opt));
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) {
      if (m >= n) {
        r.push_back(check_phi_injective(m, n, opt));
      } else {
        r.push_back(check_top_kills_tensor(m, n, opt));
        r.push_back(check_top_absorbs(m, n));
        r.push_back(check_annihilator(m, n, opt));
      }
    }
  for (int n = 1; n <= n_max; ++n) r.push_back(check_block_decomposition(n, opt));
  for (int n = 1; n <= n_max; ++n) r.push_back(check_quasi_idempotent_kills(n, opt));
  for (int n = 1; n <= n_max; ++n) r.push_back(check_specht_square_sum(n));
  return out;
}

}  // namespace rook
