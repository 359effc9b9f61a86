#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "rook/algebra.hpp"
#include "rook/diagram.hpp"
#include "rook/linalg.hpp"
#include "rook/specht.hpp"
#include "rook/tableau.hpp"

namespace rook {

using json = nlohmann::ordered_json;

json to_json(const RookDiagram& d);
json to_json(const Permutation& w);
/// {"d1": [..], "d2": [..], "r": k, "sigma": [..]}
json to_json(const Quadruple& q);
/// {"n": n, "terms": [{"coeff": "num/den", "diagram": [..]}, ...]} in
/// canonical diagram order.
json to_json(const AlgebraElement& a);
/// {"shape": [..], "n": n, "rows": [[..], ..]}
json to_json(const Tableau& t);
/// Rows as sorted arrays.
json to_json(const Tabloid& x);
/// {"index": "num/den", ...}
json to_json(const SparseVector& v);

RookDiagram diagram_from_json(const json& j);
AlgebraElement algebra_from_json(const json& j);
SparseVector vector_from_json(const json& j, std::size_t dim);

/// "1,3" -> {1,3}. Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(std::string_view text);
/// "0,2" -> [0,2]. Throws std::invalid_argument on malformed input.
RookDiagram parse_diagram(std::string_view text);
/// "2,1" -> (2,1); "0", "empty" or "" -> the empty partition.
Partition parse_partition(std::string_view text);

/// Header "# rows cols" followed by one "row col num/den" line per entry.
void write_triplets(std::ostream& os, const SparseRationalMatrix& m);
/// Throws std::invalid_argument on malformed input.
SparseRationalMatrix read_triplets(std::istream& is);

}  // namespace rook
