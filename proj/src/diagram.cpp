#include "rook/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rook {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN)
    throw std::out_of_range("diagram size n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxN) + "]");
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Subsets of {1..n} of size k in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  if (k == 0) return {{}};
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RookDiagram

RookDiagram::RookDiagram(std::span<const int> img) {
  const int n = static_cast<int>(img.size());
  check_n(n);
  n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxN + 1> seen{};
  for (int a = 0; a < n; ++a) {
    const int b = img[static_cast<std::size_t>(a)];
    if (b < 0 || b > n)
      throw std::invalid_argument("diagram entry " + std::to_string(b) + " outside [0, " +
                                  std::to_string(n) + "]");
    if (b != 0) {
      if (seen[static_cast<std::size_t>(b)])
        throw std::invalid_argument("bottom vertex " + std::to_string(b) + " used twice");
      seen[static_cast<std::size_t>(b)] = true;
    }
    img_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  }
}

RookDiagram RookDiagram::identity(int n) {
  check_n(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return RookDiagram(img);
}

std::vector<int> RookDiagram::images() const {
  return std::vector<int>(img_.begin(), img_.begin() + n_);
}

int RookDiagram::rank() const {
  int r = 0;
  for (int a = 0; a < n_; ++a) r += img_[static_cast<std::size_t>(a)] != 0;
  return r;
}

std::vector<int> RookDiagram::isolated_top() const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a)
    if (img(a) == 0) out.push_back(a);
  return out;
}

std::vector<int> RookDiagram::isolated_bottom() const {
  std::array<bool, kMaxN + 1> hit{};
  for (int a = 1; a <= n_; ++a) hit[static_cast<std::size_t>(img(a))] = true;
  std::vector<int> out;
  for (int b = 1; b <= n_; ++b)
    if (!hit[static_cast<std::size_t>(b)]) out.push_back(b);
  return out;
}

std::uint64_t RookDiagram::key() const {
  std::uint64_t k = 0;
  for (int a = 0; a < n_; ++a) k = (k << 4) | img_[static_cast<std::size_t>(a)];
  return k;
}

std::string RookDiagram::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int a = 1; a <= n_; ++a) os << (a > 1 ? "," : "") << img(a);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_diagram(const RookDiagram& d) {
  if (!d.is_permutation()) throw std::invalid_argument("diagram " + d.to_string() + " is not a permutation");
  return Permutation(d.images());
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

RookDiagram Permutation::to_diagram() const { return RookDiagram(images_); }

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j) inv += images_[i] > images_[j];
  return inv;
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> img(static_cast<std::size_t>(v.n()));
  for (int i = 1; i <= v.n(); ++i) img[static_cast<std::size_t>(i - 1)] = w(v(i));
  return Permutation(std::move(img));
}

// ----------------------------------------------------------------- operations

RookDiagram generator(int n, GeneratorKind kind, int i) {
  check_n(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  if (kind == GeneratorKind::s) {
    if (i < 1 || i > n - 1) throw std::out_of_range("s_" + std::to_string(i) + " not in R_" + std::to_string(n));
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  } else {
    if (i < 1 || i > n) throw std::out_of_range("p_" + std::to_string(i) + " not in R_" + std::to_string(n));
    img[static_cast<std::size_t>(i - 1)] = 0;
  }
  return RookDiagram(img);
}

std::vector<RookDiagram> generators(int n) {
  std::vector<RookDiagram> out;
  for (int i = 1; i < n; ++i) out.push_back(generator(n, GeneratorKind::s, i));
  for (int i = 1; i <= n; ++i) out.push_back(generator(n, GeneratorKind::p, i));
  return out;
}

RookDiagram multiply(const RookDiagram& a, const RookDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("cannot multiply diagrams of different n");
  RookDiagram out;
  out.n_ = a.n_;
  for (std::size_t v = 0; v < a.n_; ++v) {
    const std::uint8_t mid = a.img_[v];
    out.img_[v] = mid == 0 ? 0 : b.img_[mid - 1u];
  }
  return out;
}

RookDiagram star(const RookDiagram& d) {
  RookDiagram out;
  out.n_ = d.n_;
  for (std::size_t a = 0; a < d.n_; ++a)
    if (d.img_[a] != 0) out.img_[d.img_[a] - 1u] = static_cast<std::uint8_t>(a + 1);
  return out;
}

std::vector<RookDiagram> enumerate_rank_class(int n, int r) {
  check_n(n);
  if (r < 0 || r > n) throw std::out_of_range("rank class r outside [0, n]");
  const int k = n - r;
  std::vector<RookDiagram> out;
  out.reserve(rank_class_size(n, r));
  // top support x bottom support x bijection between them
  for (const auto& tops : subsets(n, k)) {
    for (const auto& bottoms : subsets(n, k)) {
      std::vector<int> perm = bottoms;
      do {
        std::vector<int> img(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < k; ++j)
          img[static_cast<std::size_t>(tops[static_cast<std::size_t>(j)] - 1)] = perm[static_cast<std::size_t>(j)];
        out.emplace_back(img);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RookDiagram> enumerate(int n) {
  std::vector<RookDiagram> out;
  for (int r = 0; r <= n; ++r) {
    auto cls = enumerate_rank_class(n, r);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t rank_class_size(int n, int r) {
  const std::uint64_t c = binomial(n, r);
  return c * c * factorial(n - r);
}

std::uint64_t rook_monoid_order(int n) {
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) {
    const std::uint64_t c = binomial(n, r);
    total += c * c * factorial(r);
  }
  return total;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool is_coset_rep(const Permutation& w, int r) {
  for (int i = 1; i < w.n(); ++i) {
    if (i == r) continue;
    if (w(i) > w(i + 1)) return false;
  }
  return true;
}

std::vector<Permutation> coset_reps(int n, int r) {
  check_n(n);
  if (r < 0 || r > n) throw std::out_of_range("coset_reps: r outside [0, n]");
  std::vector<Permutation> out;
  for (const auto& head : subsets(n, r)) {
    std::vector<int> img = head;
    for (int v = 1; v <= n; ++v)
      if (!std::binary_search(head.begin(), head.end(), v)) img.push_back(v);
    out.emplace_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Quadruple factorize(const RookDiagram& d) {
  const int n = d.n();
  const auto iso_top = d.isolated_top();
  const auto iso_bot = d.isolated_bottom();
  const int r = static_cast<int>(iso_top.size());

  std::vector<int> d1 = iso_top;
  for (int a = 1; a <= n; ++a)
    if (d.img(a) != 0) d1.push_back(a);
  std::vector<int> d2 = iso_bot;
  for (int b = 1; b <= n; ++b)
    if (!std::binary_search(iso_bot.begin(), iso_bot.end(), b)) d2.push_back(b);

  std::vector<int> pos_in_d2(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) pos_in_d2[static_cast<std::size_t>(d2[static_cast<std::size_t>(k - 1)])] = k;

  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  for (int j = r + 1; j <= n; ++j)
    sigma[static_cast<std::size_t>(j - 1)] =
        pos_in_d2[static_cast<std::size_t>(d.img(d1[static_cast<std::size_t>(j - 1)]))];

  return Quadruple{Permutation(std::move(d1)), Permutation(std::move(d2)), r, Permutation(std::move(sigma))};
}

RookDiagram compose_quadruple(const Quadruple& q) {
  const int n = q.d1.n();
  if (q.r < 0 || q.r > n || q.d2.n() != n || q.sigma.n() != n)
    throw std::invalid_argument("malformed quadruple");
  RookDiagram acc = q.d1.inverse().to_diagram();
  for (int i = 1; i <= q.r; ++i) acc = multiply(acc, generator(n, GeneratorKind::p, i));
  acc = multiply(acc, q.sigma.to_diagram());
  return multiply(acc, q.d2.to_diagram());
}

int perm_length(const Permutation& w) { return w.length(); }

int diagram_length(const RookDiagram& d) {
  const Quadruple q = factorize(d);
  return q.d1.length() + q.sigma.length() + q.d2.length();
}

int diagram_sign(const RookDiagram& d) {
  const Quadruple q = factorize(d);
  const int e = q.r + q.d1.length() + q.sigma.length() + q.d2.length();
  return e % 2 == 0 ? 1 : -1;
}

// --------------------------------------------------------------- DiagramBasis

DiagramBasis::DiagramBasis(int n) : n_(n), diagrams_(enumerate(n)) {
  sorted_keys_.reserve(diagrams_.size());
  for (std::size_t i = 0; i < diagrams_.size(); ++i) sorted_keys_.emplace_back(diagrams_[i].key(), i);
}

const DiagramBasis& DiagramBasis::of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DiagramBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<DiagramBasis>(n);
  return *slot;
}

std::size_t DiagramBasis::index(const RookDiagram& d) const {
  if (d.n() != n_) throw std::out_of_range("diagram of wrong size for this basis");
  // keys are sorted because diagrams_ is in canonical order
  const auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), std::make_pair(d.key(), std::size_t{0}));
  if (it == sorted_keys_.end() || it->first != d.key()) throw std::out_of_range("diagram not in basis");
  return it->second;
}

// --------------------------------------------------------------- presentation

PresentationReport verify_presentation(int n, const MultiplyFn& mul) {
  if (n < 2) throw std::out_of_range("verify_presentation needs n >= 2");
  PresentationReport rep;
  rep.n = n;
  auto s = [n](int i) { return generator(n, GeneratorKind::s, i); };
  auto p = [n](int i) { return generator(n, GeneratorKind::p, i); };
  const RookDiagram one = RookDiagram::identity(n);
  auto prod = [&](std::initializer_list<RookDiagram> xs) {
    RookDiagram acc = one;
    bool first = true;
    for (const auto& x : xs) {
      acc = first ? x : mul(acc, x);
      first = false;
    }
    return acc;
  };
  auto check = [&](const std::string& family, const std::string& inst, const RookDiagram& lhs,
                   const RookDiagram& rhs) {
    ++rep.instances_checked;
    if (lhs != rhs) rep.failures.push_back({family, inst + ": " + lhs.to_string() + " != " + rhs.to_string()});
  };
  auto idx = [](const char* g, int i) { return std::string(g) + "_" + std::to_string(i); };

  for (int i = 1; i <= n - 1; ++i) check("s_i^2=1", idx("s", i), prod({s(i), s(i)}), one);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) > 1)
        check("s_is_j=s_js_i", idx("s", i) + "," + idx("s", j), prod({s(i), s(j)}), prod({s(j), s(i)}));
  for (int i = 1; i <= n - 2; ++i)
    check("s_is_{i+1}s_i=s_{i+1}s_is_{i+1}", idx("s", i), prod({s(i), s(i + 1), s(i)}),
          prod({s(i + 1), s(i), s(i + 1)}));
  for (int i = 1; i <= n; ++i) check("p_i^2=p_i", idx("p", i), prod({p(i), p(i)}), p(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) check("p_ip_j=p_jp_i", idx("p", i) + "," + idx("p", j), prod({p(i), p(j)}), prod({p(j), p(i)}));
  for (int i = 1; i <= n - 1; ++i) check("s_ip_i=p_{i+1}s_i", idx("s", i), prod({s(i), p(i)}), prod({p(i + 1), s(i)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) > 1)
        check("s_ip_j=p_js_i", idx("s", i) + "," + idx("p", j), prod({s(i), p(j)}), prod({p(j), s(i)}));
  for (int i = 1; i <= n - 1; ++i)
    check("p_is_ip_i=p_ip_{i+1}", idx("p", i), prod({p(i), s(i), p(i)}), prod({p(i), p(i + 1)}));
  return rep;
}

}  // namespace rook
