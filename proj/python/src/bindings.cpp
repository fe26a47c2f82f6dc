#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dccm/contraction.hpp"
#include "dccm/json_io.hpp"
#include "dccm/ordered_space.hpp"
#include "dccm/runs.hpp"
#include "dccm/spaces.hpp"

namespace py = pybind11;

namespace {

dccm::RunConfig make_config(const std::string& space, const std::string& map,
                            const std::string& family, std::optional<std::string> x0,
                            const std::string& mode, std::size_t n_samples, std::uint64_t seed,
                            double tol, std::size_t max_iter, double grid_step) {
    dccm::RunConfig cfg;
    cfg.space = space;
    cfg.map = map;
    cfg.family = family;
    cfg.x0 = std::move(x0);
    if (mode != "exhaustive" && mode != "random") {
        throw dccm::DomainError("mode must be 'exhaustive' or 'random'");
    }
    cfg.exhaustive = mode == "exhaustive";
    cfg.n_samples = n_samples;
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.grid_step = grid_step;
    return cfg;
}

std::tuple<std::string, int> as_result(const dccm::RunOutcome& o) {
    return {dccm::dump_report(o.report), o.exit_code};
}

}  // namespace

PYBIND11_MODULE(_dccm, m) {
    m.doc() = "Double controlled cone metric spaces: axiom checks and fixed-point runs";

    py::register_exception<dccm::DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("space_ids", &dccm::space_ids);

    m.def("metric", [](const std::string& space, const std::string& x, const std::string& y) {
        const auto s = dccm::make_space(space);
        return s.p(s.parse_point(x), s.parse_point(y)).coords();
    }, py::arg("space"), py::arg("x"), py::arg("y"));

    m.def("alpha", [](const std::string& space, const std::string& x, const std::string& y) {
        const auto s = dccm::make_space(space);
        return s.alpha(s.parse_point(x), s.parse_point(y));
    }, py::arg("space"), py::arg("x"), py::arg("y"));

    m.def("beta", [](const std::string& space, const std::string& x, const std::string& y) {
        const auto s = dccm::make_space(space);
        return s.beta(s.parse_point(x), s.parse_point(y));
    }, py::arg("space"), py::arg("x"), py::arg("y"));

    m.def("apply_map", [](const std::string& space, const std::string& map, const std::string& x) {
        const auto s = dccm::make_space(space);
        return dccm::make_map(map, s.domain()).apply(s.parse_point(x)).literal();
    }, py::arg("space"), py::arg("map"), py::arg("x"));

    m.def("verify",
          [](const std::string& space, const std::string& mode, std::size_t n_samples,
             std::uint64_t seed) {
              return as_result(dccm::run_verify(
                  make_config(space, "", "banach", std::nullopt, mode, n_samples, seed, 1e-9,
                              10'000, dccm::kDefaultGridStep)));
          },
          py::arg("space"), py::arg("mode") = "exhaustive", py::arg("n_samples") = 10'000,
          py::arg("seed") = 0);

    m.def("estimate",
          [](const std::string& space, const std::string& map, const std::string& family,
             std::size_t n_samples, std::uint64_t seed, double grid_step) {
              const auto s = dccm::make_space(space);
              const auto T = dccm::make_map(map, s.domain());
              const auto pairs = dccm::sample_pairs(s, {n_samples, seed, true});
              dccm::ContractionEstimate est;
              switch (dccm::parse_family(family)) {
                  case dccm::Family::Banach: est = dccm::estimate_banach(s, T, pairs); break;
                  case dccm::Family::Kannan:
                      est = dccm::estimate_kannan(s, T, pairs, grid_step);
                      break;
                  case dccm::Family::Reich:
                      est = dccm::estimate_reich(s, T, pairs, grid_step);
                      break;
              }
              return dccm::to_json(est).dump();
          },
          py::arg("space"), py::arg("map"), py::arg("family") = "banach",
          py::arg("n_samples") = 10'000, py::arg("seed") = 0,
          py::arg("grid_step") = dccm::kDefaultGridStep);

    m.def("solve",
          [](const std::string& space, const std::string& map, const std::string& family,
             std::optional<std::string> x0, std::size_t n_samples, std::uint64_t seed,
             double tol, std::size_t max_iter, double grid_step) {
              return as_result(dccm::run_solve(make_config(space, map, family, std::move(x0),
                                                           "random", n_samples, seed, tol,
                                                           max_iter, grid_step)));
          },
          py::arg("space"), py::arg("map"), py::arg("family") = "banach",
          py::arg("x0") = py::none(), py::arg("n_samples") = 10'000, py::arg("seed") = 0,
          py::arg("tol") = 1e-9, py::arg("max_iter") = 10'000,
          py::arg("grid_step") = dccm::kDefaultGridStep);

    m.def("summary", &dccm::render_summary, py::arg("report_texts"));

    m.def("nonnormal_family_norms", [](int n, std::size_t n_points) {
        const auto [x, y] = dccm::make_nonnormal_family(n, n_points);
        const dccm::OrderedSpace space(dccm::Cone::c1_nonnegative(n_points), dccm::Norm::C1Sum);
        const auto vx = x.to_vector();
        const auto vy = y.to_vector();
        return std::make_tuple(space.norm(vx), space.norm(vy), space.norm(vx + vy));
    }, py::arg("n"), py::arg("n_points") = 200'000);
}
