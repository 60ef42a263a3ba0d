// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "omega/bergman.hpp"
#include "omega/errors.hpp"
#include "omega/ferroni_paths.hpp"
#include "omega/omega.hpp"
#include "omega/polytope.hpp"
#include "omega/spec_io.hpp"

namespace py = pybind11;
using namespace omega;

namespace {

// Big integers cross the boundary as decimal strings; Python's int() is
// exact on them and the wrapper package does the conversion.
std::string big(const BigInt& v) { return v.str(); }

SubsetMask to_mask(const std::vector<int>& elements, int n) {
  SubsetMask s;
  for (int e : elements) {
    if (e < 0 || e >= n) fail(ErrorCode::kInvalidArgument, "element " + std::to_string(e) + " out of range");
    s = s.with(e);
  }
  return s;
}

std::vector<int> to_list(SubsetMask s) { return s.elements(); }

// Points arrive as (numerator, denominator) pairs.
RationalPoint to_point(const std::vector<std::pair<std::string, std::string>>& coords) {
  RationalPoint z;
  for (const auto& [num, den] : coords) z.emplace_back(BigInt(num), BigInt(den));
  return z;
}

std::vector<std::pair<std::string, std::string>> from_rationals(const std::vector<Rational>& values) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : values) out.emplace_back(numerator(v).str(), denominator(v).str());
  return out;
}

ChainVariant variant_or_throw(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) fail(ErrorCode::kInvalidArgument, "unknown variant " + name);
  return *v;
}

py::dict report_dict(const OmegaReport& report) {
  py::list methods;
  for (const auto& m : report.methods) {
    py::dict d;
    d["method"] = m.method;
    d["value"] = m.value ? py::object(py::str(big(*m.value))) : py::object(py::none());
    d["chains"] = big(m.chains);
    d["seconds"] = m.seconds;
    d["note"] = m.note;
    d["infeasible"] = m.infeasible;
    methods.append(d);
  }
  py::dict out;
  out["id"] = report.id;
  out["n"] = report.n;
  out["r"] = report.r;
  out["methods"] = methods;
  out["consensus"] = report.consensus ? py::object(py::str(big(*report.consensus))) : py::object(py::none());
  out["agreement"] = report.agreement;
  out["note"] = report.note;
  return out;
}

}  // namespace

PYBIND11_MODULE(_omega, mod) {
  mod.doc() = "Exact computation of the top coefficient of the matroid g-polynomial";

  // Messages start with the error code name, e.g. "NotAMatroid: ...".
  py::register_exception<OmegaError>(mod, "OmegaError", PyExc_ValueError);

  py::class_<Matroid>(mod, "Matroid")
      .def_static(
          "from_bases",
          [](int n, const std::vector<std::vector<int>>& bases) {
            std::vector<SubsetMask> masks;
            for (const auto& b : bases) masks.push_back(to_mask(b, n));
            return Matroid::from_bases(n, std::move(masks));
          },
          py::arg("n"), py::arg("bases"))
      .def_static(
          "from_spec",
          [](const std::string& text) { return parse_matroid(parse_json_text(text, "python")); },
          py::arg("spec_json"))
      .def_property_readonly("n", &Matroid::size)
      .def_property_readonly("r", [](const Matroid& m) { return m.rank(); })
      .def("rank_of", [](const Matroid& m, const std::vector<int>& s) { return m.rank(to_mask(s, m.size())); })
      .def("closure",
           [](const Matroid& m, const std::vector<int>& s) { return to_list(m.closure(to_mask(s, m.size()))); })
      .def("bases",
           [](const Matroid& m) {
             std::vector<std::vector<int>> out;
             for (SubsetMask b : m.bases()) out.push_back(to_list(b));
             return out;
           })
      .def("loops", [](const Matroid& m) { return to_list(loops(m)); })
      .def("coloops", [](const Matroid& m) { return to_list(coloops(m)); })
      .def("dual", [](const Matroid& m) { return dual(m); })
      .def("delete", [](const Matroid& m, const std::vector<int>& s) { return deletion(m, to_mask(s, m.size())); })
      .def("contract",
           [](const Matroid& m, const std::vector<int>& s) { return contraction(m, to_mask(s, m.size())); })
      .def("add_parallel", [](const Matroid& m, int e) { return add_parallel(m, e); })
      .def("__add__", [](const Matroid& a, const Matroid& b) { return direct_sum(a, b); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& m) {
        return "<Matroid n=" + std::to_string(m.size()) + " r=" + std::to_string(m.rank()) + " bases=" +
               std::to_string(m.bases().size()) + ">";
      });

  mod.def("uniform", &uniform, py::arg("r"), py::arg("n"));
  mod.def(
      "schubert",
      [](const std::vector<std::vector<int>>& chain, const std::vector<int>& a, int n, bool upper) {
        std::vector<SubsetMask> members;
        for (const auto& s : chain) members.push_back(to_mask(s, n));
        const SetChain c(std::move(members), n);
        return upper ? schubert_upper(c, a) : schubert_lower(c, a);
      },
      py::arg("chain"), py::arg("a"), py::arg("n"), py::arg("upper") = false);

  mod.def("variants", [] {
    std::vector<std::string> out;
    for (ChainVariant v : kAllChainVariants) out.emplace_back(variant_name(v));
    return out;
  });
  mod.def(
      "chain_sum",
      [](const Matroid& m, const std::string& variant, bool depth_first) {
        const auto r = chain_sum(m, variant_or_throw(variant),
                                 depth_first ? Evaluator::kDepthFirst : Evaluator::kTransfer);
        return std::make_pair(big(r.value), big(r.chains));
      },
      py::arg("m"), py::arg("variant"), py::arg("depth_first") = false,
      py::call_guard<py::gil_scoped_release>());
  mod.def(
      "omega_variant",
      [](const Matroid& m, const std::string& variant) { return big(omega::omega(m, variant_or_throw(variant))); },
      py::arg("m"), py::arg("variant"), py::call_guard<py::gil_scoped_release>());
  mod.def(
      "omega_schubert",
      [](const std::vector<std::vector<int>>& chain, const std::vector<int>& a, int n) {
        std::vector<SubsetMask> members;
        for (const auto& s : chain) members.push_back(to_mask(s, n));
        return big(omega_schubert(SetChain(std::move(members), n), a));
      },
      py::arg("chain"), py::arg("a"), py::arg("n"));
  mod.def(
      "closed_forms",
      [](const Matroid& m) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& rule : closed_form_rules(m)) out.emplace_back(std::string(rule.name), big(rule.value));
        return out;
      },
      py::arg("m"));
  mod.def(
      "report",
      [](const Matroid& m, const std::string& method, const std::string& id) {
        const auto selector = MethodSelector::parse(method);
        if (!selector) fail(ErrorCode::kInvalidArgument, "unknown method " + method);
        OmegaReport r;
        {
          py::gil_scoped_release release;
          r = omega_report(m, *selector, id);
        }
        return report_dict(r);
      },
      py::arg("m"), py::arg("method") = "auto", py::arg("id") = "");

  mod.def(
      "count_paths",
      [](int n, int r, const std::vector<std::tuple<int, int, bool>>& constraints) {
        PathProblem problem{n, r, {}};
        for (const auto& [x, y, above] : constraints) {
          problem.constraints.push_back({x, y, above ? PathMode::kWeaklyAbove : PathMode::kStrictlyBelow});
        }
        return big(count_paths(problem));
      },
      py::arg("n"), py::arg("r"), py::arg("constraints") = std::vector<std::tuple<int, int, bool>>{});

  mod.def(
      "in_base_polytope",
      [](const Matroid& m, const std::vector<std::pair<std::string, std::string>>& z) {
        return in_base_polytope(m, to_point(z));
      },
      py::arg("m"), py::arg("z"));
  mod.def(
      "check_identity",
      [](const Matroid& m, const std::string& kind, const std::vector<std::pair<std::string, std::string>>& z) {
        const auto k = parse_identity(kind);
        if (!k) fail(ErrorCode::kInvalidArgument, "unknown identity " + kind);
        const auto v = check_identity(m, *k, to_point(z));
        return std::make_pair(v.lhs, v.rhs);
      },
      py::arg("m"), py::arg("kind"), py::arg("z"));
  mod.def("x_values", [](const Matroid& m, const std::vector<std::pair<std::string, std::string>>& z) {
    return from_rationals(x_values(m, to_point(z)));
  });
  mod.def("y_values", [](const Matroid& m, const std::vector<std::pair<std::string, std::string>>& z) {
    return from_rationals(y_values(m, to_point(z)));
  });
  mod.def("bergman_contains", [](const Matroid& m, const std::vector<std::pair<std::string, std::string>>& z) {
    return bergman_contains(m, to_point(z));
  });
  mod.def("graded_matroid", [](const Matroid& m, const std::vector<std::pair<std::string, std::string>>& z) {
    return graded_matroid(m, to_point(z));
  });
}
