#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monpow/analysis.hpp"
#include "monpow/cli.hpp"
#include "monpow/errors.hpp"
#include "monpow/io.hpp"

namespace py = pybind11;
using namespace monpow;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.str());
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

ExponentVector vec(const std::vector<int>& a) { return ExponentVector(a); }

IntMatrix matrix(const std::vector<std::vector<std::int64_t>>& rows) { return IntMatrix::from_rows(rows); }

py::dict lp_dict(const LpSolution& s) {
  py::dict d;
  d["status"] = to_string(s.status);
  d["value"] = fraction(s.value);
  d["primal"] = fractions(s.primal);
  d["dual"] = fractions(s.dual);
  return d;
}

py::dict ilp_dict(const IlpSolution& s) {
  py::dict d;
  d["value"] = s.value;
  d["witness"] = s.witness;
  return d;
}

py::dict verdict_dict(const MembershipVerdict& v) {
  py::dict d;
  d["member"] = v.member;
  d["value"] = fraction(v.value);
  d["threshold"] = v.threshold;
  d["witness"] = fractions(v.witness);
  return d;
}

py::dict containment_dict(const ContainmentReport& c) {
  py::dict d;
  d["lhs"] = c.lhs.str();
  d["rhs"] = c.rhs.str();
  d["holds"] = c.holds;
  d["lhs_generators"] = c.lhs_generators;
  d["generators_checked"] = c.generators_checked;
  if (c.counterexample) {
    d["counterexample"] = c.counterexample->entries();
    d["mu"] = fraction(*c.mu);
    d["rho"] = fraction(*c.rho);
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

PowerKind kind_of(const std::string& s) {
  if (s == "ordinary") return PowerKind::ordinary;
  if (s == "closure") return PowerKind::closure;
  if (s == "symbolic") return PowerKind::symbolic;
  throw std::invalid_argument("power must be ordinary, closure or symbolic");
}

}  // namespace

PYBIND11_MODULE(_monpow, m) {
  m.doc() = "Exact membership tests for powers, integral closures and symbolic powers of monomial ideals.";

  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init([](std::size_t n, const std::vector<std::vector<int>>& gens) {
             std::vector<ExponentVector> g;
             for (const auto& e : gens) g.emplace_back(e);
             return MonomialIdeal::minimalize(n, std::move(g));
           }),
           py::arg("vars"), py::arg("gens"))
      .def_static(
          "from_strings",
          [](const std::vector<std::string>& gens, std::optional<std::size_t> vars) {
            std::string joined;
            for (const auto& s : gens) joined += s + ",";
            return parse_generator_list(joined, vars);
          },
          py::arg("gens"), py::arg("vars") = py::none())
      .def_static("from_json", [](const std::string& text) { return parse_ideal_json(text); })
      .def("to_json", &emit_ideal_json)
      .def_property_readonly("vars", &MonomialIdeal::vars)
      .def_property_readonly("generators",
                             [](const MonomialIdeal& I) {
                               std::vector<std::vector<int>> out;
                               for (const auto& g : I.generators()) out.push_back(g.entries());
                               return out;
                             })
      .def("contains", [](const MonomialIdeal& I, const std::vector<int>& a) { return I.contains(vec(a)); })
      .def("is_squarefree", &MonomialIdeal::is_squarefree)
      .def("__len__", &MonomialIdeal::size)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) { return "MonomialIdeal" + I.str(); });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("vertices"), py::arg("edges"))
      .def_static("from_json", [](const std::string& text) { return parse_hypergraph_json(text); })
      .def("to_json", &emit_hypergraph_json)
      .def_property_readonly("vertices", &Hypergraph::vertices)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("rank", &Hypergraph::rank)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& H) { return "Hypergraph(" + emit_hypergraph_json(H) + ")"; });

  m.def("solve_lp_packing", [](const std::vector<std::vector<std::int64_t>>& M, const std::vector<std::int64_t>& a) {
    return lp_dict(solve_lp_packing(PackingProgram(matrix(M), a)));
  });
  m.def("solve_lp_covering", [](const std::vector<std::vector<std::int64_t>>& M, const std::vector<std::int64_t>& a) {
    return lp_dict(solve_lp_covering(CoveringProgram(matrix(M), a)));
  });
  m.def("solve_ilp_packing", [](const std::vector<std::vector<std::int64_t>>& M, const std::vector<std::int64_t>& a) {
    return ilp_dict(solve_ilp_packing(PackingProgram(matrix(M), a)));
  });
  m.def("solve_ilp_covering", [](const std::vector<std::vector<std::int64_t>>& M, const std::vector<std::int64_t>& a) {
    return ilp_dict(solve_ilp_covering(CoveringProgram(matrix(M), a)));
  });

  m.def("nu_a", [](const MonomialIdeal& I, const std::vector<int>& a) { return nu_a(I, vec(a)); });
  m.def("nu_star_a", [](const MonomialIdeal& I, const std::vector<int>& a) { return fraction(nu_star_a(I, vec(a))); });
  m.def("tau_a", [](const MonomialIdeal& I, const std::vector<int>& a) { return tau_a(I, vec(a)); });
  m.def("tau_star_a",
        [](const MonomialIdeal& I, const std::vector<int>& a) { return fraction(tau_star_a(I, vec(a))); });
  m.def("tau_a_via_blocker",
        [](const MonomialIdeal& I, const std::vector<int>& a) { return tau_a_via_blocker(I, vec(a)); });
  m.def("nu_star_via_scaling", [](const MonomialIdeal& I, const std::vector<int>& a) {
    const ScalingResult s = nu_star_via_scaling(I, vec(a));
    return py::make_tuple(fraction(s.value), s.q, s.nu_qa);
  });

  m.def(
      "membership",
      [](const MonomialIdeal& I, const std::string& power, int k, const std::vector<int>& a) {
        return verdict_dict(membership(kind_of(power), I, k, vec(a)));
      },
      py::arg("ideal"), py::arg("power"), py::arg("k"), py::arg("a"));
  m.def("naive_power_membership",
        [](const MonomialIdeal& I, int k, const std::vector<int>& a) { return naive_power_membership(I, k, vec(a)); });

  m.def("power", [](const MonomialIdeal& I, int k) { return power(I, k); });
  m.def("multiply", &multiply);
  m.def("intersect", &intersect);
  m.def("max_gen_degree", &max_gen_degree);
  m.def("mongrade", &mongrade);
  m.def("height", &height);
  m.def(
      "symbolic_power", [](const MonomialIdeal& I, int k) { return symbolic_power(I, k).generators; }, py::arg("ideal"),
      py::arg("k"));
  m.def(
      "closure_power_generators", [](const MonomialIdeal& I, int k) { return closure_power_generators(I, k); },
      py::arg("ideal"), py::arg("k"));

  m.def("edge_ideal", &edge_ideal);
  m.def("ideal_to_hypergraph", &ideal_to_hypergraph);
  m.def("blocker", &blocker);
  m.def("parallelization", [](const Hypergraph& H, const std::vector<int>& a) {
    const ParallelHypergraph P = parallelization(H, vec(a));
    return py::make_tuple(P.graph, P.labels);
  });
  m.def(
      "minor",
      [](const Hypergraph& H, const std::vector<int>& ones, const std::vector<int>& zeros) {
        const Minor mi = minor(H, ones, zeros);
        const char* kind = mi.kind == MinorKind::regular ? "regular" : mi.kind == MinorKind::unit ? "unit" : "zero";
        return py::make_tuple(kind, mi.graph, mi.vertex_map);
      },
      py::arg("hypergraph"), py::arg("ones") = std::vector<int>{}, py::arg("zeros") = std::vector<int>{});
  m.def("nu", &nu);
  m.def("tau", &tau);
  m.def("nu_star", [](const Hypergraph& H) { return fraction(nu_star(H)); });
  m.def("tau_star", [](const Hypergraph& H) { return fraction(tau_star(H)); });
  m.def("is_konig", &is_konig);
  m.def("has_packing_property", [](const Hypergraph& H) { return has_packing_property(H).holds; });
  m.def("clone_decomposition", [](const Hypergraph& G) {
    const CloneDecomposition c = clone_decomposition(G);
    return py::make_tuple(c.classes, c.reduced, c.multiplicities.entries());
  });
  m.def("max_min_cover_size", &max_min_cover_size);

  m.def(
      "check_containment",
      [](const MonomialIdeal& I, const std::string& lhs, const std::string& rhs) {
        return containment_dict(check_containment(parse_power_expression(lhs, I), parse_power_expression(rhs, I)));
      },
      py::arg("ideal"), py::arg("lhs"), py::arg("rhs"));
  m.def(
      "resurgence_bounds",
      [](const MonomialIdeal& I, int h_max, int k_max) {
        const ResurgenceReport r = resurgence_bounds(I, h_max, k_max);
        py::dict d;
        d["lower_bound"] = fraction(r.lower_bound);
        d["upper_bound"] = fraction(r.upper_bound);
        d["violations"] = r.violations;
        return d;
      },
      py::arg("ideal"), py::arg("h_max"), py::arg("k_max"));
  m.def("huneke_counterexample", [](int m_) {
    const HunekeReport r = huneke_counterexample(m_);
    py::dict d;
    d["n"] = r.n;
    d["height"] = r.height;
    d["d"] = r.d;
    d["ones_is_minimal_generator"] = r.ones_is_minimal_generator;
    d["symbolic_degree"] = r.symbolic_degree;
    d["ok"] = r.ok;
    d["ideal"] = r.ideal;
    return d;
  });

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
