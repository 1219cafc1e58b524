#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tverberg/bounds.hpp"
#include "tverberg/io.hpp"
#include "tverberg/lp_feas.hpp"
#include "tverberg/partition_engine.hpp"
#include "tverberg/permutations.hpp"
#include "tverberg/tukey.hpp"
#include "tverberg/verify.hpp"

namespace py = pybind11;
using namespace tverberg;

namespace {

// Coordinates arrive as strings ("3", "-1/2", "0.25"); results leave as JSON
// text that the Python layer decodes into Fractions.
using Rows = std::vector<std::vector<std::string>>;

PointConfig make(const Rows& rows, std::size_t dim, const std::optional<std::vector<int>>& colors) {
  PointConfig cfg;
  cfg.dim = dim;
  for (const auto& row : rows) {
    Vector p;
    for (const auto& x : row) p.push_back(parse_scalar(x));
    cfg.points.push_back(std::move(p));
  }
  cfg.colors = colors;
  cfg.validate();
  return cfg;
}

Vector make_vector(const std::vector<std::string>& xs) {
  Vector v;
  for (const auto& x : xs) v.push_back(parse_scalar(x));
  return v;
}

Partition make_partition(std::size_t r, const std::vector<std::size_t>& labels) {
  Partition p{r, labels};
  p.validate();
  return p;
}

Method method_of(const std::string& name) { return io::method_from_name(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Tukey depth and Tverberg tolerance certificates";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);

  m.def("depth", [](const Rows& pts, std::size_t dim, const std::vector<std::string>& center) {
    return io::to_json(depth(make(pts, dim, std::nullopt), make_vector(center))).dump();
  });
  m.def("block_depth", [](const Rows& pts, std::size_t dim, const std::vector<std::vector<std::size_t>>& blocks,
                          const std::vector<std::string>& center) {
    return io::to_json(block_depth(make(pts, dim, std::nullopt), blocks, make_vector(center))).dump();
  });
  m.def("depth_oracle", [](const Rows& pts, std::size_t dim, const std::vector<std::string>& center,
                           std::uint64_t budget) {
    return depth_oracle(make(pts, dim, std::nullopt), make_vector(center), budget);
  });
  m.def("origin_in_hull", [](const Rows& pts, std::size_t dim) -> std::optional<std::string> {
    const auto cfg = make(pts, dim, std::nullopt);
    std::vector<std::size_t> all(cfg.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto w = origin_in_hull(cfg, all);
    if (!w) return std::nullopt;
    io::Json j = io::Json::array();
    for (const auto& [i, a] : w->coefficients) j.push_back(io::Json::array({i, to_string(a)}));
    return j.dump();
  });
  m.def("hulls_intersect", [](const Rows& pts, std::size_t dim, const std::vector<std::vector<std::size_t>>& parts)
            -> std::optional<std::string> {
    auto hit = hulls_intersect(make(pts, dim, std::nullopt), parts);
    if (!hit) return std::nullopt;
    return io::to_json(hit->common_point).dump();
  });

  m.def("tolerance", [](const Rows& pts, std::size_t dim, std::size_t r, const std::vector<std::size_t>& labels,
                        const std::string& method, std::uint64_t budget) {
    const auto cfg = make(pts, dim, std::nullopt);
    const auto p = make_partition(r, labels);
    const auto rep = method_of(method) == Method::lifted_depth ? tolerance_by_lifted_depth(cfg, p)
                                                               : tolerance_exhaustive(cfg, p, kNoCap, budget);
    return io::to_json(rep).dump();
  });
  m.def("colored_tolerance", [](const Rows& pts, std::size_t dim, const std::vector<int>& colors, std::size_t r,
                                const std::vector<std::size_t>& labels, const std::string& method,
                                std::uint64_t budget) {
    return io::to_json(colored_tolerance(make(pts, dim, colors), make_partition(r, labels), method_of(method), budget))
        .dump();
  });
  m.def("reay_tolerance", [](const Rows& pts, std::size_t dim, std::size_t r, const std::vector<std::size_t>& labels,
                             std::size_t k, const std::string& method, std::uint64_t budget) {
    return io::to_json(reay_tolerance(make(pts, dim, std::nullopt), make_partition(r, labels), k, method_of(method), budget))
        .dump();
  });

  m.def("certified_partition", [](const Rows& pts, std::size_t dim, std::size_t r, std::int64_t t, std::uint64_t seed,
                                  std::uint64_t max_trials) -> std::optional<std::string> {
    auto got = certified_partition(make(pts, dim, std::nullopt), r, t, seed, max_trials);
    if (!got) return std::nullopt;
    io::Json j;
    j["partition"] = io::to_json(got->partition);
    j["report"] = io::to_json(got->report);
    j["trial"] = got->trial;
    return j.dump();
  });
  m.def("certified_colored_partition", [](const Rows& pts, std::size_t dim, const std::vector<int>& colors,
                                          std::size_t r, std::int64_t t, std::uint64_t seed,
                                          std::uint64_t max_trials) -> std::optional<std::string> {
    auto got = certified_colored_partition(make(pts, dim, colors), r, t, seed, max_trials);
    if (!got) return std::nullopt;
    io::Json j;
    j["partition"] = io::to_json(got->partition);
    j["report"] = io::to_json(got->report);
    j["trial"] = got->trial;
    return j.dump();
  });
  m.def("random_partition", [](std::size_t n, std::size_t r, std::uint64_t seed) {
    return random_partition(n, r, seed).labels;
  });

  m.def("tolerance_from_n", &bounds::tolerance_from_n);
  m.def("n_for_tolerance", &bounds::n_for_tolerance);
  m.def("n_for_probability", &bounds::n_for_probability);
  m.def("colored_tolerance_from_n", &bounds::colored_tolerance_from_n);
  m.def("reay_tolerance_from_m", &bounds::reay_tolerance_from_m);
  m.def("carath_depth_bound", &bounds::carath_depth_bound);
  m.def("carath_guaranteed_depth", &bounds::carath_guaranteed_depth);
  m.def("fixed_point_probability", [](std::int64_t r) { return to_string(bounds::fixed_point_probability(r)); });
  m.def("derangements", [](std::size_t r) { return derangements(r).get_str(); });

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
