#include "tverberg/io.hpp"

#include <fstream>
#include <sstream>

namespace tverberg::io {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Scalar scalar_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational string such as \"-3/7\" or an integer, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json to_json(const PointConfig& cfg) {
  Json j;
  j["dimension"] = cfg.dim;
  Json pts = Json::array();
  for (const auto& p : cfg.points) pts.push_back(to_json(p));
  j["points"] = std::move(pts);
  if (cfg.colors) j["colors"] = *cfg.colors;
  return j;
}

PointConfig config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
    throw InputError("point configuration needs \"dimension\" and \"points\"");
  PointConfig cfg;
  if (!j["dimension"].is_number_unsigned() || j["dimension"].get<std::size_t>() == 0)
    throw InputError("\"dimension\" must be a positive integer");
  cfg.dim = j["dimension"].get<std::size_t>();
  if (!j["points"].is_array()) throw InputError("\"points\" must be an array");
  for (const auto& p : j["points"]) cfg.points.push_back(vector_from_json(p));
  if (j.contains("colors") && !j["colors"].is_null()) {
    if (!j["colors"].is_array()) throw InputError("\"colors\" must be an array of integers");
    std::vector<int> colors;
    for (const auto& c : j["colors"]) {
      if (!c.is_number_integer()) throw InputError("color ids must be integers");
      colors.push_back(c.get<int>());
    }
    cfg.colors = std::move(colors);
  }
  try {
    cfg.validate();
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
  return cfg;
}

PointConfig config_from_csv(std::istream& in, bool trailing_color) {
  PointConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  std::vector<int> colors;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto fields = split_csv_line(line);
    for (auto& f : fields) f = trim(f);
    if (first) {
      first = false;
      bool header = false;
      try {
        parse_scalar(fields.front());
      } catch (const std::invalid_argument&) {
        header = true;
      }
      if (header) {
        if (fields.back() == "color" || fields.back() == "class") trailing_color = true;
        continue;
      }
    }
    if (trailing_color) {
      if (fields.size() < 2) throw InputError("csv line " + std::to_string(line_no) + ": missing color column");
      try {
        colors.push_back(std::stoi(fields.back()));
      } catch (const std::exception&) {
        throw InputError("csv line " + std::to_string(line_no) + ": color id must be an integer");
      }
      fields.pop_back();
    }
    Vector p;
    for (const auto& f : fields) {
      try {
        p.push_back(parse_scalar(f));
      } catch (const std::invalid_argument& e) {
        throw InputError("csv line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (cfg.dim == 0) cfg.dim = p.size();
    if (p.size() != cfg.dim)
      throw InputError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(cfg.dim) +
                       " coordinates");
    cfg.points.push_back(std::move(p));
  }
  if (cfg.points.empty()) throw InputError("csv input has no points");
  if (trailing_color) cfg.colors = std::move(colors);
  return cfg;
}

PointConfig read_config(const std::string& path, bool csv_colors) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return config_from_csv(in, csv_colors);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return config_from_json(j);
}

Json to_json(const Partition& p) {
  Json j;
  j["r"] = p.r;
  j["labels"] = p.labels;
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("labels"))
    throw InputError("partition needs \"r\" and \"labels\"");
  Partition p;
  try {
    p.r = j["r"].get<std::size_t>();
    p.labels = j["labels"].get<std::vector<std::size_t>>();
    p.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid partition: ") + e.what());
  }
  return p;
}

Json to_json(const HalfSpace& h) {
  Json j;
  j["normal"] = to_json(h.normal);
  j["offset"] = to_json(h.offset);
  return j;
}

Json to_json(const DepthCertificate& cert) {
  Json j;
  j["depth"] = cert.depth;
  j["mode"] = cert.mode == DepthMode::point ? "point-depth" : "block-depth";
  j["candidate_count"] = cert.candidate_count;
  j["witness_halfspace"] = to_json(cert.witness);
  return j;
}

std::string method_name(Method m) { return m == Method::lifted_depth ? "lifted-depth" : "exhaustive-oracle"; }

Method method_from_name(const std::string& name) {
  if (name == "lifted" || name == "lifted-depth") return Method::lifted_depth;
  if (name == "exhaustive" || name == "exhaustive-oracle") return Method::exhaustive_oracle;
  throw InputError("unknown method '" + name + "' (expected lifted or exhaustive)");
}

Json to_json(const ToleranceReport& report) {
  Json j;
  j["tolerance"] = report.tolerance;
  j["method"] = method_name(report.method);
  j["removal_unit"] = report.unit == RemovalUnit::points ? "points" : "classes";
  j["witness_removal"] = report.witness_removal ? Json(*report.witness_removal) : Json(nullptr);
  if (report.depth_certificate) {
    j["depth"] = report.depth_certificate->depth;
    j["depth_mode"] = report.depth_certificate->mode == DepthMode::point ? "point-depth" : "block-depth";
    j["candidate_count"] = report.depth_certificate->candidate_count;
    j["witness_halfspace"] = to_json(report.depth_certificate->witness);
  }
  if (report.common_point_sample) j["common_point"] = to_json(*report.common_point_sample);
  j["capped"] = report.capped;
  return j;
}

Json to_json(const ReayReport& report) {
  Json j;
  j["tolerance"] = report.tolerance;
  Json tuples = Json::array();
  for (std::size_t i = 0; i < report.tuples.size(); ++i) {
    Json t = to_json(report.reports[i]);
    t["parts"] = report.tuples[i];
    tuples.push_back(std::move(t));
  }
  j["tuples"] = std::move(tuples);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace tverberg::io
