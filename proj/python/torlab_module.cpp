#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torlab/corpus.hpp"
#include "torlab/homology.hpp"

namespace py = pybind11;
using namespace torlab;
using json = nlohmann::json;

namespace {

corpus::Options make_options(std::uint32_t bound, std::int64_t window, std::size_t samples, std::uint64_t seed,
                             std::optional<std::uint32_t> p, std::uint32_t levels) {
  corpus::Options o;
  o.bound = bound;
  o.window = window;
  o.samples = samples;
  o.seed = seed;
  o.p = p;
  o.levels = levels;
  return o;
}

std::string verify(const std::vector<std::string>& ids, std::uint32_t bound, std::int64_t window, std::size_t samples,
                   std::uint64_t seed, std::optional<std::uint32_t> p, std::uint32_t levels, bool timing) {
  auto o = make_options(bound, window, samples, seed, p, levels);
  std::vector<corpus::VerdictReport> reports;
  {
    py::gil_scoped_release release;
    reports = corpus::verify_all(ids, o);
  }
  return corpus::suite_json(reports, timing).dump();
}

std::string wpr_principal(const std::string& ring, const std::string& element, std::uint32_t U, std::uint32_t V) {
  auto r = rings::Ring::from_json(json::parse(ring));
  return homology::wpr_test_principal(r->element(json(element)), U, V).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact torsion, Koszul and Cech computations";
  py::register_exception<Error>(m, "TorlabError");
  m.def("check_ids", &corpus::check_ids);
  m.def("reference_index", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : corpus::reference_index()) out.emplace_back(e.check_id, e.paper_ref, e.summary);
    return out;
  });
  m.def("verify_json", &verify, py::arg("ids"), py::arg("bound") = 12, py::arg("window") = 8,
        py::arg("samples") = 100, py::arg("seed") = 1, py::arg("p") = py::none(), py::arg("levels") = 2,
        py::arg("timing") = true);
  m.def("nonwpr_descriptor_json", [](std::uint32_t V) { return corpus::nonwpr_descriptor(V).dump(); },
        py::arg("V") = 8);
  m.def("wpr_principal_json", &wpr_principal, py::arg("ring"), py::arg("element"), py::arg("U") = 3,
        py::arg("V") = 8);
}
