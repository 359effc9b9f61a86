#include "rook/serialize.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rook {

json to_json(const RookDiagram& d) { return json(d.images()); }

json to_json(const Permutation& w) { return json(w.images()); }

json to_json(const Quadruple& q) {
  return json{{"d1", to_json(q.d1)}, {"d2", to_json(q.d2)}, {"r", q.r}, {"sigma", to_json(q.sigma)}};
}

json to_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back({{"coeff", format_rational(c)}, {"diagram", to_json(d)}});
  return json{{"n", a.n()}, {"terms", std::move(terms)}};
}

json to_json(const Tableau& t) {
  return json{{"shape", t.shape().parts()}, {"n", t.n()}, {"rows", t.rows()}};
}

json to_json(const Tabloid& x) { return json(x.rows()); }

json to_json(const SparseVector& v) {
  json out = json::object();
  for (const auto& [i, c] : v.entries()) out[std::to_string(i)] = format_rational(c);
  return out;
}

RookDiagram diagram_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("diagram JSON must be an array");
  return RookDiagram(j.get<std::vector<int>>());
}

AlgebraElement algebra_from_json(const json& j) {
  AlgebraElement a(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    a.add_term(diagram_from_json(t.at("diagram")), parse_rational(t.at("coeff").get<std::string>()));
  return a;
}

SparseVector vector_from_json(const json& j, std::size_t dim) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [k, v] : j.items()) {
    const std::size_t i = std::stoul(k);
    if (i >= dim) throw std::invalid_argument("vector index " + k + " outside dimension");
    entries.emplace_back(i, parse_rational(v.get<std::string>()));
  }
  return SparseVector(dim, std::move(entries));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size())
      throw std::invalid_argument("expected a comma-separated integer list, got '" + std::string(text) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

RookDiagram parse_diagram(std::string_view text) {
  const auto img = parse_int_list(text);
  return RookDiagram(img);
}

Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "0" || text == "empty") return Partition();
  return Partition(parse_int_list(text));
}

void write_triplets(std::ostream& os, const SparseRationalMatrix& m) {
  os << "# " << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& t : m.triplets()) os << t.row << ' ' << t.col << ' ' << format_rational(t.value) << '\n';
}

SparseRationalMatrix read_triplets(std::istream& is) {
  std::string line;
  std::size_t rows = 0, cols = 0;
  bool header = false;
  std::vector<SparseRationalMatrix::Triplet> trips;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!header) {
      char hash = 0;
      if (!(ls >> hash >> rows >> cols) || hash != '#') throw std::invalid_argument("triplets: bad header");
      header = true;
      continue;
    }
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(ls >> r >> c >> value)) throw std::invalid_argument("triplets: bad line '" + line + "'");
    if (r >= rows || c >= cols) throw std::invalid_argument("triplets: coordinate out of range");
    trips.push_back({r, c, parse_rational(value)});
  }
  if (!header) throw std::invalid_argument("triplets: missing header");
  return SparseRationalMatrix(rows, cols, std::move(trips));
}

}  // namespace rook
