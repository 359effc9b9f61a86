#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "rook/checks.hpp"
#include "rook/diagram.hpp"
#include "rook/serialize.hpp"
#include "rook/specht.hpp"
#include "rook/tensor.hpp"

namespace rook::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int m = 0;
  int r = -1;
  std::string lambda;
  std::string subset;
  std::vector<std::string> diagrams;
  std::string format = "json";
  std::string out;
  std::uint64_t max_cells = SizeCap{}.max_cells;
  bool exhaustive = false;
  bool anti = false;
  bool column = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  sub->add_option("--max-cells", o.max_cells, "Refuse phi-matrices with more than this many rows")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--exhaustive", o.exhaustive, "Disable sampling fallbacks");
}

void add_n(CLI::App* sub, Options& o) { sub->add_option("--n", o.n, "Vertices per row")->required(); }
void add_m(CLI::App* sub, Options& o) { sub->add_option("--m", o.m, "dim V")->required(); }

void require_n(const Options& o) {
  if (o.n < 1 || o.n > kMaxN) throw UsageError("--n must lie in 1.." + std::to_string(kMaxN));
}
void require_m(const Options& o) {
  if (o.m < 1) throw UsageError("--m must be at least 1");
}
void require_json(const Options& o, const std::string& cmd) {
  if (o.format != "json") throw UsageError(cmd + " produces a structured object; only --format json is supported");
}

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.exhaustive = o.exhaustive;
  c.cap.max_cells = o.max_cells;
  return c;
}

RookDiagram diagram_arg(const Options& o, const std::string& text) {
  RookDiagram d = parse_diagram(text);
  if (d.n() != o.n)
    throw UsageError("--diagram " + text + " has " + std::to_string(d.n()) + " entries, expected --n " +
                     std::to_string(o.n));
  return d;
}

// Returns the exit status for the produced payload.
using Handler = std::function<int(const Options&, std::ostream&)>;

int emit_report(const Report& rep, std::ostream& os) {
  os << rep.to_json().dump(2) << '\n';
  return rep.ok() ? kOk : kAssertionFailed;
}

int cmd_enumerate(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "enumerate");
  if (o.r > o.n) throw UsageError("--rank-class must lie in 0..n");
  const auto ds = o.r >= 0 ? enumerate_rank_class(o.n, o.r) : enumerate(o.n);
  json list = json::array();
  for (const auto& d : ds) list.push_back(to_json(d));
  json j{{"n", o.n}};
  if (o.r >= 0) j["rank_class"] = o.r;
  j["count"] = ds.size();
  j["diagrams"] = std::move(list);
  os << j.dump() << '\n';
  return kOk;
}

int cmd_mul(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "mul");
  if (o.diagrams.size() < 2) throw UsageError("mul needs at least two --diagram arguments");
  RookDiagram acc = diagram_arg(o, o.diagrams[0]);
  for (std::size_t i = 1; i < o.diagrams.size(); ++i) acc = multiply(acc, diagram_arg(o, o.diagrams[i]));
  json factors = json::array();
  for (const auto& t : o.diagrams) factors.push_back(to_json(parse_diagram(t)));
  os << json{{"factors", factors}, {"product", to_json(acc)}}.dump() << '\n';
  return kOk;
}

int cmd_factorize(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "factorize");
  if (o.diagrams.size() != 1) throw UsageError("factorize needs exactly one --diagram");
  os << to_json(factorize(diagram_arg(o, o.diagrams[0]))).dump() << '\n';
  return kOk;
}

int cmd_sign(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "sign");
  if (o.diagrams.size() != 1) throw UsageError("sign needs exactly one --diagram");
  const RookDiagram d = diagram_arg(o, o.diagrams[0]);
  os << json{{"diagram", to_json(d)}, {"length", diagram_length(d)}, {"sign", diagram_sign(d)}}.dump() << '\n';
  return kOk;
}

int cmd_symmetrizer(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "symmetrizer");
  std::vector<int> members;
  if (o.subset.empty()) {
    for (int v = 1; v <= o.n; ++v) members.push_back(v);
  } else {
    members = parse_int_list(o.subset);
  }
  const VertexSubset s(o.n, members);
  os << to_json(o.anti ? antisymmetrizer_Y(s) : symmetrizer_X(s)).dump() << '\n';
  return kOk;
}

int cmd_e_element(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "e-element");
  const Partition lam = parse_partition(o.lambda);
  if (lam.size() > o.n) throw UsageError("--lambda has more boxes than --n");
  const Tableau t = o.column ? canonical_tableau_col(lam, o.n) : canonical_tableau_row(lam, o.n);
  os << json{{"tableau", to_json(t)}, {"element", to_json(quasi_idempotent_e(t))}}.dump() << '\n';
  return kOk;
}

int cmd_specht_dims(const Options& o, std::ostream& os) {
  require_n(o);
  std::size_t total = 0;
  std::vector<std::tuple<Partition, std::size_t>> rows;
  for (const auto& lam : partitions_up_to(o.n)) {
    const std::size_t d = specht_dimension(lam, o.n);
    rows.emplace_back(lam, d);
    total += d * d;
  }
  if (o.format == "csv") {
    os << "lambda,r,dim,dim_squared\n";
    for (const auto& [lam, d] : rows) os << '"' << lam.to_string() << "\"," << lam.size() << ',' << d << ',' << d * d << '\n';
    os << "total,," << ',' << total << '\n';
  } else {
    json list = json::array();
    for (const auto& [lam, d] : rows)
      list.push_back({{"lambda", lam.parts()}, {"r", lam.size()}, {"dim", d}, {"dim_squared", d * d}});
    os << json{{"n", o.n}, {"shapes", list}, {"sum_of_squares", total}, {"order", rook_monoid_order(o.n)}}.dump(2)
       << '\n';
  }
  return total == rook_monoid_order(o.n) ? kOk : kAssertionFailed;
}

int cmd_verify_presentation(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "verify-presentation");
  if (o.n < 2) throw UsageError("verify-presentation needs --n >= 2");
  return emit_report(check_presentation(o.n), os);
}

int cmd_verify_blocks(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "verify-blocks");
  return emit_report(check_block_decomposition(o.n, check_options(o)), os);
}

int cmd_verify_kills(const Options& o, std::ostream& os) {
  require_n(o);
  require_json(o, "verify-lemma-3-10");
  return emit_report(check_quasi_idempotent_kills(o.n, check_options(o)), os);
}

int cmd_verify_schur_weyl(const Options& o, std::ostream& os) {
  require_n(o);
  require_m(o);
  require_json(o, "verify-schur-weyl");
  enforce_cap(o.m, o.n, check_options(o).cap);
  if (o.m >= o.n) return emit_report(check_phi_injective(o.m, o.n, check_options(o)), os);
  return emit_report(check_annihilator(o.m, o.n, check_options(o)), os);
}

int cmd_verify_absorb(const Options& o, std::ostream& os) {
  require_n(o);
  require_m(o);
  require_json(o, "verify-lemma-4-4");
  if (o.m + 1 > o.n) throw UsageError("verify-lemma-4-4 needs m+1 <= n");
  return emit_report(check_top_absorbs(o.m, o.n), os);
}

int cmd_verify_all(const Options& o, std::ostream& os) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  require_m(o);
  require_json(o, "verify-all");
  const AggregateReport agg = verify_all(o.n, o.m, check_options(o));
  os << agg.to_json().dump(2) << '\n';
  return agg.ok() ? kOk : kAssertionFailed;
}

int cmd_phi_matrix(const Options& o, std::ostream& os) {
  require_n(o);
  require_m(o);
  write_triplets(os, phi_matrix(o.m, o.n, check_options(o).cap));
  return kOk;
}

int cmd_annihilator(const Options& o, std::ostream& os) {
  require_n(o);
  require_m(o);
  require_json(o, "annihilator");
  const SpanBasis b = annihilator_basis(o.m, o.n, check_options(o).cap);
  json list = json::array();
  for (const auto& row : b.rows()) list.push_back(to_json(AlgebraElement::from_vector(o.n, row)));
  os << list.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rook monoid algebra toolkit"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, Handler> handlers;

  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    handlers[s] = std::move(h);
    return s;
  };

  auto* s = sub("enumerate", "List diagrams of R_n", cmd_enumerate);
  add_n(s, o);
  s->add_option("--rank-class,--r", o.r, "Only diagrams with this many isolated vertices per row");

  s = sub("mul", "Multiply diagrams left to right", cmd_mul);
  add_n(s, o);
  s->add_option("--diagram", o.diagrams, "Image list, e.g. 0,2")->required();

  s = sub("factorize", "Quadruple factorization of a diagram", cmd_factorize);
  add_n(s, o);
  s->add_option("--diagram", o.diagrams, "Image list")->required();

  s = sub("sign", "Length and sign of a diagram", cmd_sign);
  add_n(s, o);
  s->add_option("--diagram", o.diagrams, "Image list")->required();

  s = sub("symmetrizer", "Symmetrizer (or anti-symmetrizer) on a vertex subset", cmd_symmetrizer);
  add_n(s, o);
  s->add_option("--subset", o.subset, "Vertices, e.g. 1,3 (default: all)");
  s->add_flag("--anti", o.anti, "Build the anti-symmetrizer");

  s = sub("e-element", "Quasi-idempotent of a canonical tableau", cmd_e_element);
  add_n(s, o);
  s->add_option("--lambda", o.lambda, "Partition, e.g. 2,1; 0 or empty for the empty shape")->required();
  s->add_flag("--column-canonical", o.column, "Fill down columns instead of along rows");

  s = sub("specht-dims", "Specht module dimensions", cmd_specht_dims);
  add_n(s, o);

  s = sub("verify-presentation", "Check the monoid presentation", cmd_verify_presentation);
  add_n(s, o);

  s = sub("verify-blocks", "Check the block decomposition of FR_n", cmd_verify_blocks);
  add_n(s, o);

  s = sub("verify-lemma-3-10", "Check that e(t) kills the other Specht modules", cmd_verify_kills);
  add_n(s, o);

  s = sub("verify-schur-weyl", "Injectivity (m >= n) or kernel = <Y_{m+1}> (m < n)", cmd_verify_schur_weyl);
  add_n(s, o);
  add_m(s, o);

  s = sub("verify-lemma-4-4", "Check Y_{m+1} e(t_lambda) = (m+1)! e(t_lambda)", cmd_verify_absorb);
  add_n(s, o);
  add_m(s, o);

  s = sub("verify-all", "Run every check up to the given sizes", cmd_verify_all);
  add_n(s, o);
  add_m(s, o);

  s = sub("phi-matrix", "phi as coordinate triplets", cmd_phi_matrix);
  add_n(s, o);
  add_m(s, o);

  s = sub("annihilator", "Kernel of phi as a list of algebra elements", cmd_annihilator);
  add_n(s, o);
  add_m(s, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty())
      err << app.get_subcommands().front()->help();
    else
      err << app.help();
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    std::ostringstream buffer;
    const int code = handlers.at(chosen)(o, buffer);
    if (o.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        err << "error: cannot open --out " << o.out << '\n';
        return kUsage;
      }
      f << buffer.str();
    }
    return code;
  } catch (const SizeCapError& e) {
    err << "refused: " << e.what() << '\n';
    return kCapRefused;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rook::cli
