#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tverberg/geom_core.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/tukey.hpp"
#include "tverberg/verify.hpp"

namespace tverberg::io {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);

/// {"dimension": d, "points": [["p/q", ...], ...], "colors": [...]}
Json to_json(const PointConfig& cfg);
PointConfig config_from_json(const Json& j);

/// One point per row; an optional header row is skipped. With `trailing_color`
/// (or a header whose last field is "color"/"class"), the last column is an
/// integer color id.
PointConfig config_from_csv(std::istream& in, bool trailing_color = false);

/// Dispatches on the file extension (.csv, otherwise JSON).
PointConfig read_config(const std::string& path, bool csv_colors = false);

/// {"r": r, "labels": [...]} with 0-based part ids.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const HalfSpace& h);
Json to_json(const DepthCertificate& cert);
Json to_json(const ToleranceReport& report);
Json to_json(const ReayReport& report);

std::string method_name(Method m);
Method method_from_name(const std::string& name);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tverberg::io
