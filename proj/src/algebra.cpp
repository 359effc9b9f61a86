#include "rook/algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rook {

namespace {

void require_same_n(const AlgebraElement& a, const AlgebraElement& b, const char* what) {
  if (a.n() != b.n())
    throw std::invalid_argument(std::string(what) + ": mismatched n (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
}

// Below this many term pairs the thread start-up costs more than it saves.
constexpr std::size_t kParallelPairThreshold = 1 << 14;

}  // namespace

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("AlgebraElement: n out of range");
}

AlgebraElement AlgebraElement::basis(const RookDiagram& d, const Rational& c) {
  AlgebraElement a(d.n());
  a.add_term(d, c);
  return a;
}

Rational AlgebraElement::coeff(const RookDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const RookDiagram& d, const Rational& c) {
  if (d.n() != n_) throw std::invalid_argument("add_term: diagram has the wrong n");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparseVector AlgebraElement::to_vector() const {
  const auto& basis = DiagramBasis::of(n_);
  std::vector<SparseVector::Entry> entries;
  entries.reserve(terms_.size());
  for (const auto& [d, c] : terms_) entries.emplace_back(basis.index(d), c);
  return SparseVector(basis.size(), std::move(entries));
}

AlgebraElement AlgebraElement::from_vector(int n, const SparseVector& v) {
  const auto& basis = DiagramBasis::of(n);
  if (v.dimension() != basis.size()) throw std::invalid_argument("from_vector: dimension is not |R_n|");
  AlgebraElement a(n);
  for (const auto& [i, c] : v.entries()) a.terms_.emplace_hint(a.terms_.end(), basis.at(i), c);
  return a;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  require_same_n(*this, b, "add");
  for (const auto& [d, c] : b.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out += b;
  return out;
}

AlgebraElement scale(const Rational& c, const AlgebraElement& a) {
  AlgebraElement out = a;
  out *= c;
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_n(a, b, "subtract");
  AlgebraElement out = a;
  for (const auto& [d, c] : b.terms()) out.add_term(d, -c);
  return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_n(a, b, "mul");
  AlgebraElement out(a.n());
  if (a.is_zero() || b.is_zero()) return out;

  const std::vector<std::pair<RookDiagram, Rational>> lhs(a.terms().begin(), a.terms().end());
  const std::vector<std::pair<RookDiagram, Rational>> rhs(b.terms().begin(), b.terms().end());

  if (lhs.size() * rhs.size() < kParallelPairThreshold) {
    for (const auto& [d1, c1] : lhs)
      for (const auto& [d2, c2] : rhs) out.add_term(multiply(d1, d2), c1 * c2);
    return out;
  }

  std::vector<std::unordered_map<RookDiagram, Rational>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lhs.size()); ++i) {
      const auto& [d1, c1] = lhs[static_cast<std::size_t>(i)];
      for (const auto& [d2, c2] : rhs) acc[multiply(d1, d2)] += c1 * c2;
    }
  }
  for (const auto& acc : partial)
    for (const auto& [d, c] : acc) out.add_term(d, c);
  return out;
}

AlgebraElement mul(const RookDiagram& d, const AlgebraElement& a) {
  if (d.n() != a.n()) throw std::invalid_argument("mul: mismatched n");
  AlgebraElement out(a.n());
  for (const auto& [e, c] : a.terms()) out.add_term(multiply(d, e), c);
  return out;
}

AlgebraElement mul(const AlgebraElement& a, const RookDiagram& d) {
  if (d.n() != a.n()) throw std::invalid_argument("mul: mismatched n");
  AlgebraElement out(a.n());
  for (const auto& [e, c] : a.terms()) out.add_term(multiply(e, d), c);
  return out;
}

AlgebraElement star_elem(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& [d, c] : a.terms()) out.add_term(star(d), c);
  return out;
}

VertexSubset::VertexSubset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("VertexSubset: n out of range");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n)
      throw std::invalid_argument("VertexSubset: vertex " + std::to_string(members_[i]) + " outside {1..n}");
    if (i > 0 && members_[i] == members_[i - 1])
      throw std::invalid_argument("VertexSubset: vertex " + std::to_string(members_[i]) + " repeated");
  }
}

VertexSubset VertexSubset::prefix(int k, int n) {
  std::vector<int> m(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return VertexSubset(n, std::move(m));
}

bool VertexSubset::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

RookDiagram embed(const RookDiagram& d, const VertexSubset& s) {
  if (d.n() != s.size()) throw std::invalid_argument("embed: diagram size differs from |S|");
  const auto& mem = s.members();
  std::vector<int> img(static_cast<std::size_t>(s.n()));
  for (int v = 1; v <= s.n(); ++v) img[static_cast<std::size_t>(v - 1)] = v;
  for (int i = 1; i <= s.size(); ++i) {
    const int b = d.img(i);
    img[static_cast<std::size_t>(mem[static_cast<std::size_t>(i - 1)] - 1)] =
        b == 0 ? 0 : mem[static_cast<std::size_t>(b - 1)];
  }
  return RookDiagram(img);
}

std::vector<RookDiagram> subset_rank_class(const VertexSubset& s, int r) {
  if (s.size() == 0) throw std::invalid_argument("subset_rank_class: empty subset");
  std::vector<RookDiagram> out;
  for (const auto& d : enumerate_rank_class(s.size(), r)) out.push_back(embed(d, s));
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement symmetrizer_X(const VertexSubset& s) {
  if (s.size() == 0) throw std::invalid_argument("symmetrizer_X: empty subset");
  AlgebraElement out(s.n());
  Rational coef = 1;
  for (int r = 0; r <= s.size(); ++r) {
    if (r > 0) coef *= -r;
    for (const auto& d : enumerate_rank_class(s.size(), r)) out.add_term(embed(d, s), coef);
  }
  return out;
}

AlgebraElement symmetrizer_X_direct(const VertexSubset& s) {
  if (s.size() == 0) throw std::invalid_argument("symmetrizer_X_direct: empty subset");
  AlgebraElement out(s.n());
  for (const auto& d : enumerate(s.n())) {
    bool identity_off_s = true;
    for (int v = 1; v <= s.n() && identity_off_s; ++v)
      if (!s.contains(v) && d.img(v) != v) identity_off_s = false;
    if (!identity_off_s) continue;
    const int r = d.isolated_count();
    const Rational coef = (r % 2 == 0 ? 1 : -1) * factorial_q(r);
    out.add_term(d, coef);
  }
  return out;
}

AlgebraElement antisymmetrizer_Y(const VertexSubset& s) {
  if (s.size() == 0) throw std::invalid_argument("antisymmetrizer_Y: empty subset");
  AlgebraElement out(s.n());
  for (int r = 0; r <= 1 && r <= s.size(); ++r)
    for (const auto& d : enumerate_rank_class(s.size(), r)) out.add_term(embed(d, s), diagram_sign(d));
  return out;
}

AlgebraElement full_projector(int n) {
  return AlgebraElement::basis(RookDiagram(std::vector<int>(static_cast<std::size_t>(n), 0)));
}

AlgebraElement projector_product(int n, const std::vector<int>& vertices) {
  auto img = RookDiagram::identity(n).images();
  for (int v : vertices) {
    if (v < 1 || v > n) throw std::out_of_range("projector_product: vertex outside {1..n}");
    img[static_cast<std::size_t>(v - 1)] = 0;
  }
  return AlgebraElement::basis(RookDiagram(img));
}

AlgebraElement quasi_idempotent_e(const Tableau& t) {
  const int n = t.n();
  if (t.shape().empty()) return full_projector(n);
  AlgebraElement acc = AlgebraElement::basis(RookDiagram::identity(n));
  for (int j = 0; j < t.column_count(); ++j) acc = mul(acc, antisymmetrizer_Y(VertexSubset(n, t.column(j))));
  for (const auto& row : t.rows()) acc = mul(acc, symmetrizer_X(VertexSubset(n, row)));
  const auto cont = t.content();
  std::vector<int> outside;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(cont.begin(), cont.end(), v)) outside.push_back(v);
  if (!outside.empty()) acc = mul(acc, projector_product(n, outside));
  return acc;
}

AlgebraElement Y_top(int k, int n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("Y_top: n out of range");
  if (k < 1 || k > n)
    throw std::out_of_range("Y_top: need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  return antisymmetrizer_Y(VertexSubset::prefix(k, n));
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << '*' << d.to_string();
  }
  return os.str();
}

}  // namespace rook
