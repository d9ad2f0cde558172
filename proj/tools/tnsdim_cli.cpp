// tnsdim: dimension bounds for tensor network varieties.
//
// Exit status: 0 when the dimension is determined (or the command has no
// verdict), 2 when only a range is known, 1 on any error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tnsdim/dimension.hpp"
#include "tnsdim/invariants.hpp"
#include "tnsdim/report.hpp"
#include "tnsdim/spec_io.hpp"
#include "tnsdim/tables.hpp"

using namespace tnsdim;
using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  bool rational = false;
  bool json = false;
  bool csv = false;
  bool annotate = false;
  std::string command;
  std::string spec;
  std::string input;
  std::vector<std::size_t> dims;
  std::size_t r = 2;
  std::string table;
  bool sample = false;
};

template <class F>
DenseTensor<typename F::Elem> load_tensor(const Options& o, const F& field) {
  if (o.input.empty()) throw Error("--input <tensor.json> is required");
  const json doc = json::parse(read_file(o.input));
  std::optional<std::vector<std::size_t>> dims;
  if (!o.dims.empty()) dims = o.dims;
  return tensor_from_json(doc, field, dims);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

template <class F>
int cmd_dim(const Options& o, const F& field, bool full) {
  const auto net = read_spec_file(o.spec);
  const auto rep = dim_report(net, field, Rng(o.seed), o.trials, o.annotate);
  if (o.json) {
    json j = report_to_json(rep);
    if (!full) {
      j = {{"expected_dim", rep.expected_dim},
           {"upper_bound", rep.upper_bound},
           {"lower_bound", rep.lower_bound},
           {"verdict", j["verdict"]},
           {"notes", rep.notes},
           {"provenance", j["provenance"]}};
    }
    print_json(j);
  } else if (o.csv) {
    std::cout << report_csv_header() << report_to_csv_row(rep);
  } else if (full) {
    std::cout << report_to_text(rep);
  } else {
    std::cout << "expected " << rep.expected_dim << "\nupper " << rep.upper_bound << "\nlower " << rep.lower_bound
              << "\nverdict " << rep.verdict.to_string() << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
  }
  return rep.verdict.exact ? 0 : 2;
}

int cmd_reduce(const Options& o) {
  const auto net = read_spec_file(o.spec);
  const auto red = normalize(net);
  if (o.json) {
    print_json({{"input", spec_to_json(net)},
                {"normalized", spec_to_json(red.net)},
                {"trail", trail_to_json(red.trail, net)},
                {"derivation", red.trail.describe(net)},
                {"offset", red.trail.offset()}});
  } else {
    std::cout << reduction_to_text(net, red);
  }
  return 0;
}

template <class F>
int cmd_isotropy(const Options& o, const F& field) {
  std::optional<std::int64_t> gauge;
  DenseTensor<typename F::Elem> t;
  if (!o.input.empty()) {
    t = load_tensor(o, field);
  } else {
    const auto net = read_spec_file(o.spec);
    t = graph_tensor(net, field);
    gauge = gauge_dim(net);
  }
  const auto iso = static_cast<std::int64_t>(isotropy_dim(t));
  if (o.json) {
    json j = {{"isotropy_dim", iso}, {"dims", t.dims()}};
    if (gauge) j["gauge_dim"] = *gauge;
    print_json(j);
  } else {
    std::cout << "isotropy_dim " << iso << "\n";
    if (gauge) std::cout << "gauge_dim " << *gauge << "\n";
  }
  return 0;
}

template <class F>
int cmd_stabilizer(const Options& o, const F& field) {
  const auto net = read_spec_file(o.spec);
  const auto sc = stab_shortcut(net);
  Rng rng(o.seed);
  const auto x = random_map_tuple(net, field, rng);
  const auto factored = static_cast<std::int64_t>(stab_dim_factored(net, x, field));
  std::int64_t target = 1;
  for (std::size_t v = 0; v < net.order(); ++v)
    target = saturating_mul(target, saturating_mul(net.local_dim(v), net.bond_space_dim(v)));
  std::optional<std::int64_t> dense;
  if (target <= (1 << 18)) dense = static_cast<std::int64_t>(stab_dim(net, x, field));
  if (o.json) {
    print_json({{"shortcut", sc.zero ? json(0) : json(nullptr)},
                {"shortcut_reason", sc.reason},
                {"stab_dim", dense ? *dense : factored},
                {"dense", dense ? json(*dense) : json(nullptr)},
                {"factored", factored}});
  } else {
    std::cout << "shortcut " << (sc.zero ? "zero" : "none") << " (" << sc.reason << ")\n";
    if (dense) std::cout << "stab_dim dense " << *dense << "\n";
    std::cout << "stab_dim factored " << factored << "\n";
  }
  return 0;
}

template <class F>
int cmd_i6(const Options& o, const F& field) {
  const auto t = load_tensor(o, field);
  const auto v = i6(t);
  if (o.json) {
    print_json({{"i6", to_string(v)}, {"zero", v.is_zero()}});
  } else {
    std::cout << to_string(v) << "\n" << (v.is_zero() ? "zero" : "nonzero") << "\n";
  }
  return 0;
}

template <class F>
int cmd_pencil(const Options& o, const F& field) {
  const auto t = load_tensor(o, field);
  const auto q = z_membership(t, o.r, field);
  const auto zd = z_dim(static_cast<std::int64_t>(q.a), static_cast<std::int64_t>(q.b), static_cast<std::int64_t>(q.r));
  if (o.json) {
    print_json({{"a", q.a},
                {"b", q.b},
                {"r", q.r},
                {"count", q.count.infinite ? json("infinite") : json(q.count.count)},
                {"member", q.member},
                {"note", q.note},
                {"z_dim", zd}});
  } else {
    std::cout << "count " << q.count.to_string() << "\nmember " << (q.member ? "true" : "false") << "\n";
    if (!q.note.empty()) std::cout << "note: " << q.note << "\n";
    std::cout << "z_dim " << zd << "\n";
  }
  return 0;
}

template <class F>
int cmd_table(const Options& o, const F& field) {
  const auto rows = compute_table(o.table, field, Rng(o.seed), o.trials);
  if (o.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"lower", r.lower},
                     {"upper", r.upper},
                     {"starred", r.starred},
                     {"ref_lower", r.ref.lower},
                     {"ref_upper", r.ref.upper},
                     {"ref_starred", r.ref.starred},
                     {"lower_match", r.lower_match},
                     {"upper_match", r.upper_match},
                     {"starred_match", r.starred_match},
                     {"source", r.ref.source}});
    }
    print_json(arr);
  } else {
    std::cout << table_to_csv(rows);
  }
  return 0;
}

template <class F>
int cmd_dump(const Options& o, const F& field) {
  const auto net = read_spec_file(o.spec);
  DenseTensor<typename F::Elem> t;
  if (o.sample) {
    Rng rng(o.seed);
    t = sample_tns(net, field, rng);
  } else {
    t = graph_tensor(net, field);
  }
  std::cout << tensor_to_json(t).dump() << "\n";
  return 0;
}

template <class F>
int dispatch(const Options& o, const F& field) {
  if (o.command == "dim") return cmd_dim(o, field, true);
  if (o.command == "bounds") return cmd_dim(o, field, false);
  if (o.command == "reduce") return cmd_reduce(o);
  if (o.command == "isotropy") return cmd_isotropy(o, field);
  if (o.command == "stabilizer") return cmd_stabilizer(o, field);
  if (o.command == "i6") return cmd_i6(o, field);
  if (o.command == "pencil") return cmd_pencil(o, field);
  if (o.command == "table") return cmd_table(o, field);
  if (o.command == "dump-tensor") return cmd_dump(o, field);
  throw Error("no command given (try --help)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension bounds for tensor network varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--prime", o.prime, "Prime modulus")->capture_default_str();
  app.add_option("--trials", o.trials, "Random points for the lower bound")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--rational", o.rational, "Exact rational arithmetic instead of F_p");
  auto* json_flag = app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--csv", o.csv, "CSV output")->excludes(json_flag);
  app.add_flag("--annotate", o.annotate, "Attach notes about known cases");

  auto* dim = app.add_subcommand("dim", "Full dimension report");
  dim->add_option("spec", o.spec, "Network spec JSON")->required();
  auto* bounds = app.add_subcommand("bounds", "Expected value and bounds");
  bounds->add_option("spec", o.spec, "Network spec JSON")->required();
  auto* reduce = app.add_subcommand("reduce", "Print the reduction derivation");
  reduce->add_option("spec", o.spec, "Network spec JSON")->required();
  auto* iso = app.add_subcommand("isotropy", "Isotropy dimension of the graph tensor or of --input");
  iso->add_option("spec", o.spec, "Network spec JSON");
  iso->add_option("--input", o.input, "Tensor JSON");
  iso->add_option("--dims", o.dims, "Tensor dims for a bare entry array");
  auto* stab = app.add_subcommand("stabilizer", "Gauge stabilizer at a random point");
  stab->add_option("spec", o.spec, "Network spec JSON")->required();
  auto* inv = app.add_subcommand("invariant", "Polynomial invariants");
  inv->require_subcommand(1);
  auto* i6cmd = inv->add_subcommand("i6", "Degree-6 invariant of a 2x2x2x2 tensor");
  i6cmd->add_option("--input", o.input, "Tensor JSON")->required();
  i6cmd->add_option("--dims", o.dims, "Tensor dims for a bare entry array");
  auto* pencil = app.add_subcommand("pencil", "Rank-r points on the pencil of a 2 x a x b tensor");
  pencil->add_option("--input", o.input, "Tensor JSON")->required();
  pencil->add_option("--r", o.r, "Rank bound")->capture_default_str();
  pencil->add_option("--dims", o.dims, "Tensor dims for a bare entry array");
  auto* table = app.add_subcommand("table", "Reproduce a bond-2 cycle table as CSV");
  table->add_option("which", o.table, "c3 or c4")->required()->check(CLI::IsMember({"c3", "c4"}));
  auto* dump = app.add_subcommand("dump-tensor", "Dump the graph tensor (or a random sample) as JSON");
  dump->add_option("spec", o.spec, "Network spec JSON")->required();
  dump->add_flag("--sample", o.sample, "Dump (X_1 x ... x X_d).T for random X");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (auto* sub : {dim, bounds, reduce, iso, stab, pencil, table, dump}) {
    if (sub->parsed()) o.command = sub->get_name();
  }
  if (i6cmd->parsed()) o.command = "i6";

  try {
    if (o.command == "isotropy" && o.spec.empty() && o.input.empty())
      throw Error("isotropy needs a spec or --input");
    if (o.rational) return dispatch(o, RationalField{});
    return dispatch(o, PrimeField(o.prime));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
