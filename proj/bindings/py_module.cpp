// Python bindings for the main operations: posets, cores, homology,
// pi1 verdicts, canonical forms, enumeration and the verify targets.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fintop/enumerate.hpp"
#include "fintop/homology.hpp"
#include "fintop/pi1.hpp"
#include "fintop/poset_io.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"
#include "fintop/verify.hpp"

namespace py = pybind11;
using namespace fintop;

namespace {

PointSet set_from_list(const FinitePoset& x, const std::vector<int>& points) {
  PointSet s;
  for (int p : points) {
    if (p < 0 || p >= x.size()) throw std::invalid_argument("point out of range");
    s.add(p);
  }
  return s;
}

py::object group_tuple(const AbelianGroup& g) {
  return py::make_tuple(g.rank, g.torsion);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(fintop, m) {
  m.doc() = "Finite T0-spaces as posets: cores, order complexes, integral homology, "
            "pi1 triviality, canonical forms and isomorph-free enumeration.";

  py::class_<FinitePoset>(m, "FinitePoset")
      .def_static(
          "from_covers",
          [](int n, const std::vector<std::pair<int, int>>& covers) {
            return FinitePoset::from_covers(n, covers);
          },
          py::arg("n"), py::arg("covers"),
          "Build from Hasse pairs (i, j), each meaning i is covered by j.")
      .def_property_readonly("n", &FinitePoset::size)
      .def("less", &FinitePoset::less)
      .def("down_set", [](const FinitePoset& x, int p) { return x.down_set(p).to_vector(); })
      .def("up_set", [](const FinitePoset& x, int p) { return x.up_set(p).to_vector(); })
      .def("link", [](const FinitePoset& x, int p) { return x.link(p).to_vector(); })
      .def("maximal_points", [](const FinitePoset& x) { return x.maximal_points().to_vector(); })
      .def("minimal_points", [](const FinitePoset& x) { return x.minimal_points().to_vector(); })
      .def("mid_points", [](const FinitePoset& x) { return x.mid_points().to_vector(); })
      .def("height", &FinitePoset::height)
      .def("chain_count", &FinitePoset::chain_count, py::arg("k"))
      .def("euler_characteristic", &FinitePoset::euler_characteristic)
      .def("is_connected", &FinitePoset::is_connected)
      .def("opposite", &FinitePoset::opposite)
      .def("nh_suspension", &FinitePoset::nh_suspension)
      .def(
          "subspace",
          [](const FinitePoset& x, const std::vector<int>& points) {
            auto sub = x.subspace(set_from_list(x, points));
            return py::make_tuple(sub.poset, sub.points);
          },
          py::arg("points"), "Induced subposet plus the dense-index-to-original map.")
      .def("cover_pairs", &FinitePoset::cover_pairs)
      .def("__eq__", [](const FinitePoset& a, const FinitePoset& b) { return a == b; })
      .def("__repr__", [](const FinitePoset& x) {
        std::ostringstream out;
        out << "FinitePoset(n=" << x.size() << ", covers=" << x.cover_pairs().size() << ")";
        return out.str();
      });

  m.def("antichain", &antichain);
  m.def("chain", &chain);
  m.def("sphere_model", &sphere_model, py::arg("k"),
        "Minimal finite model of the k-sphere on 2k+2 points.");
  m.def("w9", &w9, "The nine-point homotopically trivial non-contractible space.");
  m.def("w9_opposite", &w9_opposite);

  m.def("is_up_beat_point", &is_up_beat_point);
  m.def("is_down_beat_point", &is_down_beat_point);
  m.def("is_beat_point", &is_beat_point);
  m.def(
      "core",
      [](const FinitePoset& x) {
        CoreResult r = core(x);
        std::vector<std::pair<int, std::string>> trace;
        for (auto [p, kind] : r.removed)
          trace.emplace_back(p, kind == BeatKind::Up ? "up" : "down");
        return py::make_tuple(r.core, trace, r.survivors);
      },
      "Beat-point-free core, the removal trace, and the surviving original indices.")
  ;
  m.def("is_contractible", &is_contractible);
  m.def("homotopy_equivalent", &homotopy_equivalent);

  m.def(
      "order_complex_counts",
      [](const FinitePoset& x) {
        OrderComplex k = order_complex(x);
        std::vector<std::size_t> counts;
        for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.simplex_count(d));
        return counts;
      },
      "Simplex counts of the order complex by dimension.");
  m.def(
      "homology",
      [](const FinitePoset& x, bool reduced) {
        HomologyProfile h = homology(order_complex(x), reduced);
        std::vector<py::object> groups;
        for (int d = 0; d <= h.top_degree(); ++d) groups.push_back(group_tuple(h.at(d)));
        return groups;
      },
      py::arg("x"), py::arg("reduced") = true,
      "Per-degree (betti rank, torsion list) of the order complex.");
  m.def(
      "relative_homology",
      [](const FinitePoset& x, const std::vector<int>& a, int degree) {
        return group_tuple(relative_homology(x, set_from_list(x, a), degree));
      },
      py::arg("x"), py::arg("a"), py::arg("degree"));
  m.def(
      "check_antichain_splitting",
      [](const FinitePoset& x, const std::vector<int>& d) {
        return check_antichain_splitting(x, set_from_list(x, d));
      },
      py::arg("x"), py::arg("d"));
  m.def("smith_normal_form", [](const IntMatrix& matrix) {
    return smith_normal_form(matrix).diagonal;
  });

  m.def(
      "is_homotopically_trivial",
      [](const FinitePoset& x, int budget) {
        TrivialityResult r = is_homotopically_trivial(x, budget);
        return verdict_name(r.verdict);
      },
      py::arg("x"), py::arg("budget") = kDefaultTietzeBudget,
      "Verdict string: trivial, nontrivial, or unknown.");

  m.def("canonical_form", [](const FinitePoset& x) {
    CanonicalForm form = canonical_form(x);
    return py::bytes(std::string(form.bytes.begin(), form.bytes.end()));
  });

  m.def(
      "enumerate_posets",
      [](int n, bool connected_only, bool cores_only, int jobs, bool collect) {
        EnumerationFilter filter;
        filter.connected_only = connected_only;
        filter.cores_only = cores_only;
        std::vector<FinitePoset> out;
        std::uint64_t count = enumerate_posets(
            n, filter,
            collect ? std::function<void(const FinitePoset&)>(
                          [&](const FinitePoset& p) { out.push_back(p); })
                    : std::function<void(const FinitePoset&)>(),
            jobs);
        return py::make_tuple(count, out);
      },
      py::arg("n"), py::arg("connected_only") = false, py::arg("cores_only") = false,
      py::arg("jobs") = 1, py::arg("collect") = false,
      "Count (and optionally collect) one representative per isomorphism class.");

  m.def(
      "classify",
      [](int max_points, int jobs, int budget) {
        ClassifyReport r = classify(max_points, jobs, budget, true);
        py::dict out;
        out["max_points"] = r.max_points;
        out["classes_per_size"] = std::vector<std::uint64_t>(r.classes_per_size.begin() + 1,
                                                             r.classes_per_size.end());
        out["connected_cores_per_size"] = std::vector<std::uint64_t>(
            r.connected_cores_per_size.begin() + 1, r.connected_cores_per_size.end());
        std::vector<py::object> findings;
        for (const auto& f : r.trivial_non_contractible)
          findings.push_back(py::make_tuple(f.points, f.representative));
        out["trivial_non_contractible"] = findings;
        out["unknown"] = r.unknown.size();
        return out;
      },
      py::arg("max_points"), py::arg("jobs") = 1, py::arg("budget") = kDefaultTietzeBudget,
      "Scan connected cores for homotopically trivial non-contractible classes.");

  m.def(
      "verify",
      [](const std::string& target, int max_points, int jobs, int budget) {
        auto parsed = parse_verify_target(target);
        if (!parsed) throw std::invalid_argument("unknown verify target: " + target);
        VerifyOptions options;
        options.max_points = max_points;
        options.jobs = jobs;
        options.tietze_budget = budget;
        VerifyOutcome outcome = run_verify(*parsed, options);
        py::dict out;
        out["target"] = outcome.target;
        out["max_points"] = outcome.max_points;
        out["exit_code"] = outcome.exit_code;
        py::dict stats;
        for (const auto& [key, value] : outcome.stats) stats[py::str(key)] = value;
        out["stats"] = stats;
        out["pass"] = outcome.pass();
        return out;
      },
      py::arg("target"), py::arg("max_points") = -1, py::arg("jobs") = 1,
      py::arg("budget") = kDefaultTietzeBudget);

  m.def("parse_poset_text", [](const std::string& text) {
    PosetDocument doc = parse_poset_text(text);
    return py::make_tuple(doc.name, doc.poset);
  });
  m.def("serialize_poset", [](const std::string& name, const FinitePoset& p) {
    return serialize_poset(PosetDocument{name, p});
  });
  m.def("export_dot", [](const std::string& name, const FinitePoset& p) {
    return export_dot(PosetDocument{name, p});
  });
}
