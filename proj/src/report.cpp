#include "tnsdim/report.hpp"

#include <sstream>

#include "tnsdim/spec_io.hpp"

namespace tnsdim {

namespace {

std::string join(const std::vector<std::int64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

json verdict_json(const Verdict& v) {
  if (v.exact) return {{"kind", "Exact"}, {"value", v.lo}};
  return {{"kind", "Range"}, {"lo", v.lo}, {"hi", v.hi}};
}

}  // namespace

json trail_to_json(const ReductionTrail& trail, const TensorNetwork& net) {
  json steps = json::array();
  for (const auto& s : trail.steps) {
    switch (s.kind) {
      case ReductionStep::Kind::DropUnitEdge:
        steps.push_back({{"kind", "DropUnitEdge"},
                         {"edge", s.drop.edge},
                         {"ends", {label_json(s.drop.head), label_json(s.drop.tail)}},
                         {"offset", 0}});
        break;
      case ReductionStep::Kind::ShrinkOverabundantBond:
        steps.push_back({{"kind", "ShrinkOverabundantBond"},
                         {"vertex", label_json(net.vertex(s.shrink.vertex).label)},
                         {"edge", s.shrink.edge},
                         {"ends", {label_json(s.shrink.head), label_json(s.shrink.tail)}},
                         {"old_m", s.shrink.old_m},
                         {"new_m", s.shrink.new_m},
                         {"offset", 0}});
        break;
      case ReductionStep::Kind::SupercriticalShrink:
        steps.push_back({{"kind", "SupercriticalShrink"},
                         {"vertex", label_json(net.vertex(s.super.vertex).label)},
                         {"old_n", s.super.old_n},
                         {"new_n", s.super.new_n},
                         {"offset", s.super.offset}});
        break;
    }
  }
  return steps;
}

json report_to_json(const DimensionReport& rep) {
  json j;
  j["network"] = spec_to_json(rep.net);
  j["normalized"] = {{"network", spec_to_json(rep.reduced.net)},
                     {"trail", trail_to_json(rep.reduced.trail, rep.net)},
                     {"offset", rep.reduced.trail.offset()},
                     {"criticality", to_string(classify(rep.reduced.net).network)}};
  j["criticality"] = to_string(classify(rep.net).network);
  j["ambient_dim"] = rep.ambient_dim;
  j["segre_hom_dim"] = rep.segre_hom_dim;
  j["gauge_dim"] = rep.gauge_dim;
  j["expected_dim"] = rep.expected_dim;
  j["reduced"] = {{"ambient_dim", rep.reduced_ambient_dim},
                  {"segre_hom_dim", rep.reduced_segre_hom_dim},
                  {"gauge_dim", rep.reduced_gauge_dim}};
  j["stab_dim"] = {{"value", rep.stab.value}, {"shortcut", rep.stab.shortcut}, {"method", rep.stab.reason}};
  j["upper_bound"] = rep.upper_bound;
  j["raw_upper_bound"] = rep.raw_upper_bound ? json(*rep.raw_upper_bound) : json(nullptr);
  j["lower_bound"] = rep.lower_bound;
  j["verdict"] = verdict_json(rep.verdict);
  j["notes"] = rep.notes;
  j["provenance"] = {{"backend", rep.provenance.backend},
                     {"prime", rep.provenance.prime ? json(rep.provenance.prime) : json(nullptr)},
                     {"seed", rep.provenance.seed},
                     {"trials", rep.provenance.trials},
                     {"version", rep.provenance.version}};
  return j;
}

std::string report_to_text(const DimensionReport& rep) {
  std::ostringstream os;
  const TensorNetwork& net = rep.net;
  os << "network " << (net.name().empty() ? "(unnamed)" : net.name()) << ": d=" << net.order()
     << " n=(" << join(net.local_dims(), ",") << ") m=(" << join(net.bond_dims(), ",") << ") "
     << to_string(classify(net).network) << "\n";
  if (!rep.reduced.trail.empty()) {
    os << "normalized: n=(" << join(rep.reduced.net.local_dims(), ",") << ") m=("
       << join(rep.reduced.net.bond_dims(), ",") << ") offset " << rep.reduced.trail.offset() << "\n";
    for (const auto& line : rep.reduced.trail.describe(net)) os << "  " << line << "\n";
  }
  os << "ambient dim      " << rep.ambient_dim << "\n";
  os << "segre hom dim    " << rep.segre_hom_dim << "\n";
  os << "gauge dim        " << rep.gauge_dim << "\n";
  os << "stab dim         " << rep.stab.value << (rep.stab.shortcut ? " (shortcut: " : " (computed: ")
     << rep.stab.reason << ")\n";
  os << "expected dim     " << rep.expected_dim << "\n";
  os << "upper bound      " << rep.upper_bound << "\n";
  if (rep.raw_upper_bound) os << "unreduced upper  " << *rep.raw_upper_bound << "\n";
  os << "lower bound      " << rep.lower_bound << "\n";
  os << "verdict          " << rep.verdict.to_string() << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << "backend " << rep.provenance.backend;
  if (rep.provenance.prime) os << " p=" << rep.provenance.prime;
  os << " seed=" << rep.provenance.seed << " trials=" << rep.provenance.trials << " version "
     << rep.provenance.version << "\n";
  return os.str();
}

std::string report_csv_header() { return "name,d,n,m,expected,upper,lower,verdict,stab,offset\n"; }

std::string report_to_csv_row(const DimensionReport& rep) {
  std::ostringstream os;
  os << rep.net.name() << "," << rep.net.order() << "," << join(rep.net.local_dims(), " ") << ","
     << join(rep.net.bond_dims(), " ") << "," << rep.expected_dim << "," << rep.upper_bound << ","
     << rep.lower_bound << "," << (rep.verdict.exact ? "Exact" : "Range") << "," << rep.stab.value << ","
     << rep.reduced.trail.offset() << "\n";
  return os.str();
}

std::string reduction_to_text(const TensorNetwork& net, const Reduced& red) {
  std::ostringstream os;
  os << "input:      n=(" << join(net.local_dims(), ",") << ") m=(" << join(net.bond_dims(), ",") << ") "
     << to_string(classify(net).network) << "\n";
  const auto lines = red.trail.describe(net);
  if (lines.empty()) os << "no reduction applies\n";
  for (std::size_t i = 0; i < lines.size(); ++i) os << "step " << (i + 1) << ": " << lines[i] << "\n";
  os << "normalized: n=(" << join(red.net.local_dims(), ",") << ") m=(" << join(red.net.bond_dims(), ",") << ") "
     << red.net.edge_count() << " edges\n";
  os << "offset " << red.trail.offset() << "\n";
  return os.str();
}

}  // namespace tnsdim
