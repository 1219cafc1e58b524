#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/bounds.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/io.hpp"
#include "tverberg/partition_engine.hpp"
#include "tverberg/tukey.hpp"
#include "tverberg/verify.hpp"

#ifndef TVERBERG_VERSION
#define TVERBERG_VERSION "0.0.0"
#endif

namespace tverberg::cli {

using io::InputError;
using io::Json;

namespace {

struct NoCertifiedPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TVERBERG_BUDGET"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw InputError(std::string("TVERBERG_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultBudget;
}

// The manifest is rebuilt from the same inputs on every run, so identical
// invocations serialize to identical bytes (given a fixed SOURCE_DATE_EPOCH).
struct Manifest {
  std::string command;
  std::vector<std::string> input_files;
  std::optional<std::uint64_t> seed;
  Json parameters = Json::object();

  Json to_json() const {
    std::string digest_input = command + '\n' + parameters.dump() + '\n' + (seed ? std::to_string(*seed) : "-") + '\n';
    for (const auto& f : input_files) digest_input += file_bytes(f);
    Json j;
    j["command"] = command;
    j["inputs_digest"] = fnv1a_hex(digest_input);
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["parameters"] = parameters;
    j["version"] = TVERBERG_VERSION;
    j["timestamp"] = timestamp();
    return j;
  }
};

void emit(std::ostream& out, Json record, const Manifest& m) {
  record["manifest"] = m.to_json();
  out << record.dump(2) << '\n';
}

Vector parse_vector(const std::string& text, std::size_t dim) {
  Vector v;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) v.push_back(parse_scalar(field));
  if (v.size() != dim)
    throw InputError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

// "0,1;2,3" -> {{0,1},{2,3}}
std::vector<std::vector<std::size_t>> parse_blocks(const std::string& text) {
  std::vector<std::vector<std::size_t>> blocks;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<std::size_t> block;
    std::stringstream gs(group);
    std::string idx;
    while (std::getline(gs, idx, ',')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(idx, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0) throw InputError("bad block index '" + idx + "'");
      block.push_back(v);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Partition read_partition(const std::string& path, std::size_t n) {
  Partition p = io::partition_from_json(io::read_json_file(path));
  if (p.size() != n)
    throw InputError("partition has " + std::to_string(p.size()) + " labels but the input has " + std::to_string(n) +
                     " points");
  return p;
}

// ---------------------------------------------------------------- plot ----

struct Px {
  double x, y;
};

bool left_turn(const Vector& o, const Vector& a, const Vector& b) {
  return sgn((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])) > 0;
}

// Andrew's monotone chain over exact coordinates.
std::vector<Vector> hull_2d(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && !left_turn(h[k - 2], h[k - 1], p)) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && !left_turn(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string render_svg(const PointConfig& cfg, const std::optional<Partition>& p,
                       const std::vector<std::size_t>& highlight, const std::optional<Vector>& common) {
  constexpr double size = 480, margin = 24;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const double x = cfg.points[i][0].get_d(), y = cfg.points[i][1].get_d();
    if (i == 0) {
      xmin = xmax = x;
      ymin = ymax = y;
    }
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  auto map = [&](const Vector& v) {
    return Px{margin + (v[0].get_d() - xmin) / span * (size - 2 * margin),
              size - margin - (v[1].get_d() - ymin) / span * (size - 2 * margin)};
  };

  std::ostringstream svg;
  const int side = static_cast<int>(size);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  svg << std::fixed << std::setprecision(2);
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (p) {
    const auto parts = p->parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<Vector> pts;
      for (std::size_t i : parts[j]) pts.push_back(cfg.points[i]);
      const auto hull = hull_2d(pts);
      if (hull.size() < 2) continue;
      svg << "<polygon points=\"";
      for (const auto& v : hull) {
        const Px q = map(v);
        svg << q.x << ',' << q.y << ' ';
      }
      svg << "\" fill=\"" << kPalette[j % 10] << "\" fill-opacity=\"0.15\" stroke=\"" << kPalette[j % 10]
          << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const Px q = map(cfg.points[i]);
    const char* color = p ? kPalette[p->labels[i] % 10] : "#333333";
    svg << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  }
  for (std::size_t i : highlight) {
    if (i >= cfg.size()) continue;
    const Px q = map(cfg.points[i]);
    svg << "<circle class=\"witness\" cx=\"" << q.x << "\" cy=\"" << q.y
        << "\" r=\"8\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  }
  if (common) {
    const Px q = map(*common);
    svg << "<path class=\"common-point\" d=\"M" << q.x - 5 << ',' << q.y - 5 << " L" << q.x + 5 << ',' << q.y + 5
        << " M" << q.x - 5 << ',' << q.y + 5 << " L" << q.x + 5 << ',' << q.y - 5
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, certify and verify Tverberg partitions with tolerance", "tverberg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TVERBERG_VERSION);

  // Every handler runs after parsing; it fills `action`.
  std::function<void()> action;

  // bound ---------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form guarantee");
  bound->require_subcommand(1);
  std::int64_t b_n = 0, b_d = 0, b_r = 0, b_t = 0, b_k = 0;
  double b_eps = 0.5;
  auto add_ndr = [&](CLI::App* sub, const char* count_flag) {
    sub->add_option(count_flag, b_n, "Number of points (or classes)")->required();
    sub->add_option("--d", b_d, "Dimension")->required();
    sub->add_option("--r", b_r, "Number of parts")->required();
  };
  auto* b_plain = bound->add_subcommand("plain", "Tolerance guaranteed for N points");
  add_ndr(b_plain, "--n");
  auto* b_colored = bound->add_subcommand("colored", "Class tolerance guaranteed for N color classes");
  add_ndr(b_colored, "--n");
  auto* b_reay = bound->add_subcommand("reay", "Tolerance for every k-tuple of parts");
  add_ndr(b_reay, "--m");
  b_reay->add_option("--k", b_k, "Tuple size")->required();
  auto* b_eps_cmd = bound->add_subcommand("epsilon", "Smallest N for a random partition to succeed w.p. 1 - eps");
  b_eps_cmd->add_option("--t", b_t, "Target tolerance")->required();
  b_eps_cmd->add_option("--d", b_d, "Dimension")->required();
  b_eps_cmd->add_option("--r", b_r, "Number of parts")->required();
  b_eps_cmd->add_option("--eps", b_eps, "Failure probability in (0, 1)")->required();
  auto* b_carath = bound->add_subcommand("carath", "Depth bound for a random colorful choice");
  add_ndr(b_carath, "--n");

  auto bound_action = [&](const std::string& formula) {
    return [&, formula] {
      Manifest m{"bound " + formula, {}, std::nullopt, Json::object()};
      Json rec;
      rec["formula"] = formula;
      Json in;
      if (formula == "epsilon") {
        in["t"] = b_t, in["d"] = b_d, in["r"] = b_r, in["eps"] = b_eps;
        rec["inputs"] = in;
        const auto n = bounds::n_for_probability(b_t, b_d, b_r, b_eps);
        rec["N"] = n;
      } else {
        in[formula == "reay" ? "m" : "n"] = b_n, in["d"] = b_d, in["r"] = b_r;
        if (formula == "reay") in["k"] = b_k;
        rec["inputs"] = in;
        if (formula == "plain") {
          rec["t"] = bounds::tolerance_from_n(b_n, b_d, b_r);
        } else if (formula == "colored") {
          rec["t"] = bounds::colored_tolerance_from_n(b_n, b_d, b_r);
          rec["p_r"] = to_string(bounds::fixed_point_probability(b_r));
        } else if (formula == "reay") {
          rec["t"] = bounds::reay_tolerance_from_m(b_n, b_d, b_r, b_k);
          rec["lambda"] = bounds::reay_lambda(b_n, b_d, b_r, b_k);
        } else {
          rec["bound"] = bounds::carath_depth_bound(b_n, b_d, b_r);
          rec["depth"] = bounds::carath_guaranteed_depth(b_n, b_d, b_r);
        }
      }
      m.parameters = rec["inputs"];
      emit(out, rec, m);
    };
  };
  b_plain->callback([&] { action = bound_action("plain"); });
  b_colored->callback([&] { action = bound_action("colored"); });
  b_reay->callback([&] { action = bound_action("reay"); });
  b_eps_cmd->callback([&] { action = bound_action("epsilon"); });
  b_carath->callback([&] { action = bound_action("carath"); });

  // partition -----------------------------------------------------------
  auto* part = app.add_subcommand("partition", "Search for a certified partition");
  std::string p_input, p_mode = "plain", p_out_partition, p_out_report;
  std::size_t p_r = 2, p_k = 2;
  std::int64_t p_t = 0;
  std::uint64_t p_seed = 0, p_trials = 1000;
  bool p_csv_colors = false;
  part->add_option("input", p_input, "Point configuration (.json or .csv)")->required();
  part->add_option("--r", p_r, "Number of parts")->required();
  part->add_option("--t", p_t, "Target tolerance")->required();
  part->add_option("--seed", p_seed, "64-bit seed");
  part->add_option("--max-trials", p_trials, "Random trials before giving up");
  part->add_option("--mode", p_mode, "plain, colored or reay")->check(CLI::IsMember({"plain", "colored", "reay"}));
  part->add_option("--k", p_k, "Tuple size in reay mode");
  part->add_option("--out-partition", p_out_partition, "Write the partition JSON here");
  part->add_option("--out-report", p_out_report, "Write the tolerance report JSON here");
  part->add_flag("--csv-colors", p_csv_colors, "Last CSV column is a color id");
  part->callback([&] {
    action = [&] {
      const PointConfig cfg = io::read_config(p_input, p_csv_colors);
      Manifest m{"partition", {p_input}, p_seed, Json::object()};
      m.parameters["mode"] = p_mode, m.parameters["r"] = p_r, m.parameters["t"] = p_t;
      m.parameters["max_trials"] = p_trials;
      if (p_mode == "reay") m.parameters["k"] = p_k;
      if (p_t < 0) throw InputError("--t must be non-negative");
      if (p_r < 2) throw InputError("--r must be at least 2");

      const auto n = static_cast<std::int64_t>(cfg.size());
      const auto r = static_cast<std::int64_t>(p_r);
      Json rec;
      Json partition_json, report_json;
      std::uint64_t trial = 0;
      if (p_mode == "colored") {
        if (!cfg.colors) throw InputError("colored mode needs color ids in the input");
        const auto classes = color_classes(cfg);
        for (std::size_t c = 0; c < classes.size(); ++c)
          if (classes[c].size() != p_r)
            throw InputError("color class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                             " points, expected " + std::to_string(p_r));
        if (p_t >= static_cast<std::int64_t>(classes.size()))
          throw NoCertifiedPartition("unachievable: removing all " + std::to_string(classes.size()) +
                                     " classes empties every part, so class tolerance is below " +
                                     std::to_string(classes.size()));
        auto got = certified_colored_partition(cfg, p_r, p_t, p_seed, p_trials);
        if (!got) throw NoCertifiedPartition("no certified colorful partition within " + std::to_string(p_trials) + " trials");
        partition_json = io::to_json(got->partition);
        report_json = io::to_json(got->report);
        trial = got->trial;
      } else {
        if (n <= r * p_t)
          throw NoCertifiedPartition("unachievable: with N = " + std::to_string(n) + " <= r t = " +
                                     std::to_string(r * p_t) + " some part has at most t points");
        if (p_mode == "reay") {
          if (p_k < 2 || p_k > p_r) throw InputError("--k must satisfy 2 <= k <= r");
          auto got = certified_reay_partition(cfg, p_r, p_k, p_t, p_seed, p_trials);
          if (!got) throw NoCertifiedPartition("no certified Reay partition within " + std::to_string(p_trials) + " trials");
          partition_json = io::to_json(got->partition);
          report_json = io::to_json(got->report);
          trial = got->trial;
        } else {
          auto got = certified_partition(cfg, p_r, p_t, p_seed, p_trials);
          if (!got) throw NoCertifiedPartition("no certified partition within " + std::to_string(p_trials) + " trials");
          partition_json = io::to_json(got->partition);
          report_json = io::to_json(got->report);
          trial = got->trial;
        }
      }
      const Json manifest = m.to_json();
      if (!p_out_partition.empty()) {
        Json j = partition_json;
        j["manifest"] = manifest;
        io::write_json_file(p_out_partition, j);
      }
      if (!p_out_report.empty()) {
        Json j = report_json;
        j["manifest"] = manifest;
        io::write_json_file(p_out_report, j);
      }
      rec["status"] = "certified";
      rec["trial"] = trial;
      rec["partition"] = partition_json;
      rec["report"] = report_json;
      rec["manifest"] = manifest;
      out << rec.dump(2) << '\n';
    };
  });

  // verify --------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "Compute the tolerance of a given partition");
  std::string v_input, v_partition, v_method = "lifted", v_mode = "plain";
  std::size_t v_tcap = kNoCap, v_k = 2;
  std::uint64_t v_budget = 0;
  bool v_csv_colors = false;
  ver->add_option("input", v_input, "Point configuration (.json or .csv)")->required();
  ver->add_option("partition", v_partition, "Partition JSON")->required();
  ver->add_option("--method", v_method, "lifted or exhaustive")->check(CLI::IsMember({"lifted", "exhaustive"}));
  ver->add_option("--t-cap", v_tcap, "Stop the exhaustive search at this tolerance");
  ver->add_option("--budget", v_budget, "Maximum LP calls (default: TVERBERG_BUDGET or 1000000)");
  ver->add_option("--mode", v_mode, "plain, colored or reay")->check(CLI::IsMember({"plain", "colored", "reay"}));
  ver->add_option("--k", v_k, "Tuple size in reay mode");
  ver->add_flag("--csv-colors", v_csv_colors, "Last CSV column is a color id");
  ver->callback([&] {
    action = [&] {
      const PointConfig cfg = io::read_config(v_input, v_csv_colors);
      const Partition p = read_partition(v_partition, cfg.size());
      const Method method = io::method_from_name(v_method);
      const std::uint64_t budget = v_budget ? v_budget : default_budget();
      Manifest m{"verify", {v_input, v_partition}, std::nullopt, Json::object()};
      m.parameters["method"] = v_method, m.parameters["mode"] = v_mode, m.parameters["budget"] = budget;
      if (v_tcap != kNoCap) m.parameters["t_cap"] = v_tcap;
      if (v_mode == "reay") m.parameters["k"] = v_k;
      Json rec;
      if (v_mode == "colored") {
        rec = io::to_json(colored_tolerance(cfg, p, method, budget));
      } else if (v_mode == "reay") {
        rec = io::to_json(reay_tolerance(cfg, p, v_k, method, budget));
      } else if (method == Method::lifted_depth) {
        rec = io::to_json(tolerance_by_lifted_depth(cfg, p));
      } else {
        rec = io::to_json(tolerance_exhaustive(cfg, p, v_tcap, budget));
      }
      emit(out, rec, m);
    };
  });

  // depth ---------------------------------------------------------------
  auto* dep = app.add_subcommand("depth", "Exact Tukey depth with a witness half-space");
  std::string d_input, d_center, d_blocks;
  bool d_csv_colors = false;
  dep->add_option("input", d_input, "Point configuration (.json or .csv)")->required();
  dep->add_option("--center", d_center, "Comma-separated query point (default: origin)");
  dep->add_option("--blocks", d_blocks, "Blocks as '0,1;2,3', or 'colors' to use the color classes");
  dep->add_flag("--csv-colors", d_csv_colors, "Last CSV column is a color id");
  dep->callback([&] {
    action = [&] {
      const PointConfig cfg = io::read_config(d_input, d_csv_colors);
      const Vector c = d_center.empty() ? Vector(cfg.dim) : parse_vector(d_center, cfg.dim);
      Manifest m{"depth", {d_input}, std::nullopt, Json::object()};
      m.parameters["center"] = io::to_json(c);
      if (!d_blocks.empty()) m.parameters["blocks"] = d_blocks;
      DepthCertificate cert;
      if (d_blocks.empty()) {
        cert = depth(cfg, c);
      } else {
        const auto blocks = d_blocks == "colors" ? color_classes(cfg) : parse_blocks(d_blocks);
        cert = block_depth(cfg, blocks, c);
      }
      emit(out, io::to_json(cert), m);
    };
  });

  // gen -----------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic point configuration");
  gen_cmd->require_subcommand(1);
  std::size_t g_n = 0, g_d = 2, g_side = 3, g_classes = 0, g_r = 2;
  std::uint64_t g_seed = 0;
  std::int64_t g_scale = 1000;
  std::string g_out;
  auto* g_ball = gen_cmd->add_subcommand("uniform-ball", "Lattice points uniform in the unit ball");
  g_ball->add_option("--n", g_n, "Number of points")->required();
  g_ball->add_option("--d", g_d, "Dimension");
  g_ball->add_option("--seed", g_seed, "64-bit seed");
  g_ball->add_option("--scale", g_scale, "Lattice denominator");
  auto* g_grid = gen_cmd->add_subcommand("grid", "The grid {0..side-1}^d");
  g_grid->add_option("--side", g_side, "Points per axis")->required();
  g_grid->add_option("--d", g_d, "Dimension");
  auto* g_line = gen_cmd->add_subcommand("line", "The points 1..n on a line");
  g_line->add_option("--n", g_n, "Number of points")->required();
  auto* g_colored = gen_cmd->add_subcommand("colored-classes", "Color classes of r ball points each");
  g_colored->add_option("--classes", g_classes, "Number of classes")->required();
  g_colored->add_option("--r", g_r, "Points per class")->required();
  g_colored->add_option("--d", g_d, "Dimension");
  g_colored->add_option("--seed", g_seed, "64-bit seed");
  g_colored->add_option("--scale", g_scale, "Lattice denominator");
  for (auto* sub : {g_ball, g_grid, g_line, g_colored}) sub->add_option("--out", g_out, "Output path (default stdout)");

  auto gen_action = [&](const std::string& kind) {
    return [&, kind] {
      Manifest m{"gen " + kind, {}, std::nullopt, Json::object()};
      PointConfig cfg;
      if (kind == "uniform-ball") {
        cfg = gen::uniform_ball(g_n, g_d, g_seed, g_scale);
        m.seed = g_seed;
        m.parameters["n"] = g_n, m.parameters["d"] = g_d, m.parameters["scale"] = g_scale;
      } else if (kind == "grid") {
        cfg = gen::grid(g_side, g_d);
        m.parameters["side"] = g_side, m.parameters["d"] = g_d;
      } else if (kind == "line") {
        cfg = gen::line(g_n);
        m.parameters["n"] = g_n;
      } else {
        cfg = gen::colored_classes(g_classes, g_r, g_d, g_seed, g_scale);
        m.seed = g_seed;
        m.parameters["classes"] = g_classes, m.parameters["r"] = g_r, m.parameters["d"] = g_d;
        m.parameters["scale"] = g_scale;
      }
      Json j = io::to_json(cfg);
      j["manifest"] = m.to_json();
      if (g_out.empty()) {
        out << j.dump(2) << '\n';
      } else {
        io::write_json_file(g_out, j);
      }
    };
  };
  g_ball->callback([&] { action = gen_action("uniform-ball"); });
  g_grid->callback([&] { action = gen_action("grid"); });
  g_line->callback([&] { action = gen_action("line"); });
  g_colored->callback([&] { action = gen_action("colored-classes"); });

  // plot ----------------------------------------------------------------
  auto* plot = app.add_subcommand("plot", "Static SVG of a planar instance");
  std::string pl_input, pl_partition, pl_report, pl_out;
  bool pl_csv_colors = false;
  plot->add_option("input", pl_input, "Point configuration (.json or .csv)")->required();
  plot->add_option("--partition", pl_partition, "Partition JSON (colors points and draws part hulls)");
  plot->add_option("--report", pl_report, "Tolerance report JSON (highlights the witness removal)");
  plot->add_option("--out", pl_out, "SVG output path")->required();
  plot->add_flag("--csv-colors", pl_csv_colors, "Last CSV column is a color id");
  plot->callback([&] {
    action = [&] {
      const PointConfig cfg = io::read_config(pl_input, pl_csv_colors);
      if (cfg.dim != 2) throw InputError("plot needs a planar instance, got dimension " + std::to_string(cfg.dim));
      std::optional<Partition> p;
      if (!pl_partition.empty()) p = read_partition(pl_partition, cfg.size());
      std::vector<std::size_t> highlight;
      std::optional<Vector> common;
      if (!pl_report.empty()) {
        Json rep = io::read_json_file(pl_report);
        if (rep.contains("report")) rep = rep["report"];
        if (rep.contains("removal_unit") && rep["removal_unit"] == "classes")
          throw InputError("plot highlights point removals only; this report counts color classes");
        if (rep.contains("witness_removal") && rep["witness_removal"].is_array())
          highlight = rep["witness_removal"].get<std::vector<std::size_t>>();
        if (rep.contains("common_point")) common = io::vector_from_json(rep["common_point"]);
      }
      std::ofstream svg(pl_out);
      if (!svg) throw InputError("cannot write " + pl_out);
      svg << render_svg(cfg, p, highlight, common);
      Manifest m{"plot", {pl_input}, std::nullopt, Json::object()};
      m.parameters["out"] = pl_out;
      Json rec;
      rec["svg"] = pl_out;
      rec["points"] = cfg.size();
      rec["highlighted"] = highlight.size();
      emit(out, rec, m);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << TVERBERG_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (this instance needs about " << e.required() << ")\n";
    return kBudgetExceeded;
  } catch (const NoCertifiedPartition& e) {
    err << e.what() << '\n';
    return kNoCertifiedPartition;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace tverberg::cli
