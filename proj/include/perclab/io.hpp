#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "perclab/bound.hpp"
#include "perclab/lattice.hpp"
#include "perclab/path_count.hpp"
#include "perclab/sim.hpp"

namespace perclab {

using Json = nlohmann::json;

// "%.17g": enough digits to reproduce the double exactly.
std::string format_float17(double x);

// FNV-1a 64-bit checksum, lowercase hex.
std::string fnv1a64_hex(std::string_view bytes);

// Arc / vertex listings. Plain form joins "a1,a2" tokens with " / ".
std::string arcs_plain(const std::vector<Vertex>& vertices);
std::string arcs_csv(const std::vector<Vertex>& vertices);
Json arcs_json(const std::vector<Vertex>& vertices);

// Path-count rows. CSV columns: k,i,coefficient,power_of_two,count; big
// integers are decimal strings in both formats.
std::string count_row_csv(const PathCountRow& row);
Json count_row_json(const PathCountRow& row);
PathCountRow count_row_from_json(const Json& j);

std::string histogram_csv(const PathHistogram& hist);
Json histogram_json(const PathHistogram& hist);

// Bound tables. CSV columns: k,mid,log_count,b_k,abs_err_vs_limit.
std::string bound_csv(const std::vector<BoundPoint>& points);
Json bound_json(const std::vector<BoundPoint>& points);
std::vector<BoundPoint> bound_from_json(const Json& j);

// Crossing estimates. CSV columns:
// variant,k,p,event,trials,hits,phat,ci_low,ci_high,seed
std::string estimate_csv_header();
std::string estimate_csv_row(const CrossingEstimate& est);
std::string estimates_csv(const std::vector<CrossingEstimate>& table);
Json estimate_json(const CrossingEstimate& est);
CrossingEstimate estimate_from_json(const Json& j);
Json estimates_json(const std::vector<CrossingEstimate>& table);

}  // namespace perclab
