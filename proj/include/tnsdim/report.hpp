#pragma once

// Text, JSON and CSV renderings of dimension reports and reduction trails.

#include <string>

#include "json.hpp"

#include "tnsdim/dimension.hpp"
#include "tnsdim/netgraph.hpp"

namespace tnsdim {

nlohmann::json trail_to_json(const ReductionTrail& trail, const TensorNetwork& net);
nlohmann::json report_to_json(const DimensionReport& rep);
std::string report_to_text(const DimensionReport& rep);

/// Columns: name,d,n,m,expected,upper,lower,verdict,stab,offset
std::string report_csv_header();
std::string report_to_csv_row(const DimensionReport& rep);

/// Lines of the reduction derivation, ending with the total offset.
std::string reduction_to_text(const TensorNetwork& net, const Reduced& red);

}  // namespace tnsdim
