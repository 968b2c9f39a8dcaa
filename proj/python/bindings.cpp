#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brainswap/cycleswap.hpp"
#include "brainswap/errors.hpp"
#include "brainswap/keeler.hpp"
#include "brainswap/perm.hpp"
#include "brainswap/verifier.hpp"

namespace py = pybind11;
using namespace brainswap;

namespace {

MachineSpec make_spec(const std::string& machine, std::optional<std::size_t> p, std::size_t n) {
  switch (parse_machine_kind(machine)) {
    case MachineKind::swap2:
      return MachineSpec::swap2(n);
    case MachineKind::cycle3:
      return MachineSpec::cycle3(n);
    case MachineKind::pcycle:
      if (!p) throw InvalidArgument("machine 'pcycle' needs p");
      return MachineSpec::pcycle(*p, n);
  }
  throw InvalidArgument("unknown machine");
}

std::vector<Cycle> to_cycles(const std::vector<std::vector<Point>>& lists) {
  std::vector<Cycle> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Repair plans for brain-swap scrambles built from distinct machine runs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<Cycle>(m, "Cycle")
      .def(py::init<std::vector<Point>>())
      .def_property_readonly("points",
                             [](const Cycle& c) { return std::vector<Point>(c.points().begin(), c.points().end()); })
      .def("__len__", &Cycle::length)
      .def("canonical", &Cycle::canonical)
      .def("to_permutation", &Cycle::to_permutation)
      .def("__str__", &Cycle::to_string)
      .def("__repr__", [](const Cycle& c) { return "Cycle" + c.to_string(); })
      .def(py::self == py::self);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<>())
      .def_static("identity", &Permutation::identity)
      .def_static("from_images", &Permutation::from_images, py::arg("images"))
      .def_static("parse", &parse_cycles, py::arg("text"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); })
      .def("__call__", &Permutation::operator(), py::arg("point"))
      .def("is_identity", &Permutation::is_identity)
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def("power", [](const Permutation& p, std::int64_t k) { return power(p, k); })
      .def("cycles", [](const Permutation& p) { return cycle_decomposition(p); })
      .def("parity", [](const Permutation& p) { return std::string(to_string(parity(p))); })
      .def("support", [](const Permutation& p) { return support(p); })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &format_cycles)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + format_cycles(p) + "')"; });

  py::class_<FactorSequence>(m, "FactorSequence")
      .def_property_readonly("factors", [](const FactorSequence& s) { return s.factors; })
      .def_readonly("base_degree", &FactorSequence::base_degree)
      .def_readonly("extras", &FactorSequence::extras)
      .def("product", &FactorSequence::product)
      .def("__len__", &FactorSequence::size)
      .def("__str__", &FactorSequence::to_string);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("composition_ok", &VerifyReport::composition_ok)
      .def_readonly("shape_ok", &VerifyReport::shape_ok)
      .def_readonly("freshness_ok", &VerifyReport::freshness_ok)
      .def_readonly("distinctness_ok", &VerifyReport::distinctness_ok)
      .def_readonly("subgroup_ok", &VerifyReport::subgroup_ok)
      .def_readonly("failures", &VerifyReport::failures)
      .def_property_readonly("passed", &VerifyReport::passed);

  m.def("parse_cycles", &parse_cycles, py::arg("text"));
  m.def("format_cycles", &format_cycles, py::arg("perm"));
  m.def("compose", &compose, py::arg("p"), py::arg("q"));

  m.def(
      "solve",
      [](const Permutation& target, const std::string& machine, std::optional<std::size_t> p,
         std::optional<std::size_t> n) {
        return solve(target, make_spec(machine, p, n.value_or(target.largest_moved())));
      },
      py::arg("target"), py::arg("machine") = "swap2", py::arg("p") = py::none(),
      py::arg("n") = py::none(),
      "Repair plan for target; factors multiply (leftmost last) to target's inverse.");

  m.def(
      "verify",
      [](const std::vector<std::vector<Point>>& factors, const Permutation& target,
         const std::string& machine, std::optional<std::size_t> p, std::size_t n) {
        FactorSequence seq;
        seq.factors = to_cycles(factors);
        return verify(seq, target, make_spec(machine, p, n));
      },
      py::arg("factors"), py::arg("target"), py::arg("machine"), py::arg("p") = py::none(),
      py::arg("n"));

  m.def(
      "search_min_sequence",
      [](const Permutation& target, const std::string& machine, std::optional<std::size_t> p,
         std::size_t n, std::size_t max_len) -> std::optional<std::vector<Cycle>> {
        auto found = search_min_sequence(target, make_spec(machine, p, n), max_len);
        if (!found) return std::nullopt;
        return found->sequence.factors;
      },
      py::arg("target"), py::arg("machine"), py::arg("p") = py::none(), py::arg("n"),
      py::arg("max_len") = kSearchMaxDepth);

  m.def(
      "simulate",
      [](const std::vector<std::vector<Point>>& history, const std::string& machine,
         std::optional<std::size_t> p, std::size_t n) {
        const auto sim = simulate(to_cycles(history), make_spec(machine, p, n));
        return py::make_tuple(sim.state.mind_in_body, sim.legal, sim.violations);
      },
      py::arg("history"), py::arg("machine"), py::arg("p") = py::none(), py::arg("n") = 0,
      "Returns (mind_in_body, legal, violations).");

  m.def("invert_permutation_as_transpositions", &keeler::invert_permutation_as_transpositions,
        py::arg("p"), py::arg("n") = py::none());
  m.def("invert_permutation_3cycles", &cycleswap::invert_permutation_3cycles, py::arg("p"),
        py::arg("n") = py::none());
  m.def(
      "invert_permutation_pcycles",
      [](const Permutation& perm, std::size_t p, std::optional<std::size_t> n) {
        return cycleswap::invert_permutation_pcycles(perm, cycleswap::PrimeSpec(p), n);
      },
      py::arg("perm"), py::arg("p"), py::arg("n") = py::none());
}
