#include "nilvar/classify.hpp"
#include "nilvar/homalg.hpp"
#include "nilvar/io.hpp"
#include "nilvar/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nilvar;

namespace {

MatrixPairModule sum_of_strings(const std::vector<std::string>& strings, int a, int b) {
  const AlgebraParams params(a, b);
  std::vector<MatrixPairModule> parts;
  for (const auto& s : strings) parts.push_back(string_module(Word::parse(s, params)));
  return direct_sum(params, parts);
}

} // namespace

PYBIND11_MODULE(_nilvar, m) {
  m.doc() = "Components of module varieties over K[x,y]/(xy, x^a, y^b)";

  m.def("classify_json", [](int n, int a, int b) { return classification_to_json(classify(n, a, b)).dump(); },
        py::arg("n"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("string_module_json",
        [](const std::string& c, int a, int b) {
          return module_to_json(string_module(Word::parse(c, AlgebraParams(a, b)))).dump();
        },
        py::arg("c"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("band_module_json",
        [](const std::string& band, const std::vector<std::string>& lambdas, int a, int b) {
          std::vector<Rational> ls;
          for (const auto& l : lambdas) ls.push_back(parse_rational(l));
          return module_to_json(band_module(Word::parse(band, AlgebraParams(a, b)), ls)).dump();
        },
        py::arg("band"), py::arg("lambdas"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("hom_dim",
        [](const std::string& c1, const std::string& c2, int a, int b) {
          const AlgebraParams params(a, b);
          return hom_dim_graph(Word::parse(c1, params), Word::parse(c2, params));
        },
        py::arg("c1"), py::arg("c2"), py::arg("a") = 3, py::arg("b") = 3,
        "Number of graph maps M(c1) -> M(c2).");

  m.def("hom_dim_oracle",
        [](const std::string& c1, const std::string& c2, int a, int b) {
          return hom_dim_oracle(sum_of_strings({c1}, a, b), sum_of_strings({c2}, a, b));
        },
        py::arg("c1"), py::arg("c2"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("ext1_vanishes",
        [](const std::string& c, const std::string& d, int a, int b) {
          const AlgebraParams params(a, b);
          return ext1_vanishes(Word::parse(c, params), Word::parse(d, params));
        },
        py::arg("c"), py::arg("d"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("jordan_pair",
        [](const std::string& c, int a, int b) {
          const auto [pa, pb] = jordan_pair(sum_of_strings({c}, a, b));
          return std::pair{pa.parts(), pb.parts()};
        },
        py::arg("c"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("end_dim",
        [](const std::vector<std::string>& strings, int a, int b) {
          return end_dim(sum_of_strings(strings, a, b));
        },
        py::arg("strings"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("orbit_dim",
        [](const std::vector<std::string>& strings, int a, int b) {
          return orbit_dim(sum_of_strings(strings, a, b));
        },
        py::arg("strings"), py::arg("a") = 3, py::arg("b") = 3,
        "n^2 - dim End of a direct sum of string modules.");

  m.def("delta_dim",
        [](const std::vector<int>& pa, const std::vector<int>& pb, int a, int b) {
          return delta_dim(PartitionPair(Partition(pa), Partition(pb), AlgebraParams(a, b)));
        },
        py::arg("pa"), py::arg("pb"), py::arg("a") = 3, py::arg("b") = 3);

  m.def("regular_dense", [](int n, int a, int b) { return regular_dense(n, AlgebraParams(a, b)); },
        py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("dual", [](const std::vector<int>& p) { return dual(Partition(p)).parts(); });
  m.def("dominates", [](const std::vector<int>& p, const std::vector<int>& q) {
    return dominates(Partition(p), Partition(q));
  });

  m.def("verify",
        [](const std::string& level, std::uint64_t seed) {
          if (level != "quick" && level != "full") throw py::value_error("level must be quick or full");
          py::list out;
          for (const auto& r : run_verify(level == "full" ? VerifyLevel::full : VerifyLevel::quick, seed)) {
            py::dict d;
            d["name"] = r.name;
            d["checks"] = r.checks;
            d["ok"] = r.ok;
            d["counterexample"] = r.counterexample;
            d["info"] = r.info;
            out.append(d);
          }
          return out;
        },
        py::arg("level") = "quick", py::arg("seed") = 1);
}
