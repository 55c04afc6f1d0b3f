#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathlab/embeddings.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/fields.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/isomorphism.hpp"
#include "wreathlab/sizes.hpp"
#include "wreathlab/specs.hpp"
#include "wreathlab/verify.hpp"

namespace py = pybind11;
using namespace wreathlab;

namespace {

py::object to_int(const BigInt& n) { return py::module_::import("builtins").attr("int")(n.str()); }

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict embedding_dict(const GroupHom& phi, const WreathProduct& w) {
  py::dict table;
  for (Element x = 0; x < phi.domain().order(); ++x) table[py::str(phi.domain().label(x))] = w.format(phi(x));
  py::dict out;
  out["phi"] = table;
  out["report"] = to_py(verify_embedding(phi).to_json());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups, wreath products and their embeddings";

  auto& base_error = py::register_exception<Error>(m, "WreathlabError");
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base_error.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base_error.ptr());
  py::register_exception<SectionMismatch>(m, "SectionMismatch", base_error.ptr());

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return parse_group(spec); }), py::arg("spec"))
      .def_static("from_json", [](const std::string& text) { return group_from_json(nlohmann::json::parse(text)); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("label", &FiniteGroup::label)
      .def("element", [](const FiniteGroup& g, const std::string& token) { return parse_element(g, token); })
      .def("identify", [](const FiniteGroup& g) { return identify_small(g); })
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("to_json", [](const FiniteGroup& g) { return group_to_json(g).dump(); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  py::class_<WreathProduct>(m, "Wreath")
      .def_property_readonly("order", [](const WreathProduct& w) { return w.product().order(); })
      .def_property_readonly("group", &WreathProduct::product)
      .def_property_readonly("omega_size", &WreathProduct::omega_size)
      .def("encode", [](const WreathProduct& w, const std::vector<Element>& f, Element h) { return w.encode(f, h); })
      .def("decode", &WreathProduct::decode)
      .def("format", &WreathProduct::format)
      .def("parse", [](const WreathProduct& w, const std::string& s) { return w.parse(s); });

  m.def(
      "build_wreath",
      [](const FiniteGroup& k, const FiniteGroup& h, const std::string& omega, std::uint64_t cap) {
        return build_wreath(k, parse_omega(h, omega), cap);
      },
      py::arg("k"), py::arg("h"), py::arg("omega") = "regular", py::arg("size_cap") = kDefaultSizeCap);

  m.def(
      "kk_embedding",
      [](const std::string& group, const std::string& normal, const std::string& section) {
        const auto g = parse_group(group);
        const auto ses = ShortExactSequence::from_normal(g, parse_subgroup(g, normal));
        const auto e = kk_embedding(ses, default_section(ses.eps(), parse_section_overrides(ses.q(), g, section)));
        return embedding_dict(e.phi, e.wreath);
      },
      py::arg("group"), py::arg("normal"), py::arg("section") = "");

  m.def(
      "omega_embedding",
      [](const std::string& group, const std::string& subgroup) {
        const auto g = parse_group(group);
        const auto e = omega_embedding(g, parse_subgroup(g, subgroup));
        return embedding_dict(e.phi, e.wreath);
      },
      py::arg("group"), py::arg("subgroup"));

  m.def(
      "tower_embedding",
      [](const std::string& field, const std::string& k, const std::string& alpha, const std::string& section) {
        const auto tower = parse_tower(field, k, alpha);
        if (section.empty()) {
          const auto e = quadratic_kummer_embedding(tower);
          return embedding_dict(e.phi, e.wreath);
        }
        const auto groups = tower_groups(tower);
        const auto overrides = parse_section_overrides(groups.gal_k, groups.gal_l, section);
        const auto e = kk_embedding(groups.ses, default_section(groups.ses.eps(), overrides));
        return embedding_dict(e.phi, e.wreath);
      },
      py::arg("field"), py::arg("k"), py::arg("alpha"), py::arg("section") = "");

  m.def(
      "chi",
      [](const std::string& field, const std::string& k, const std::string& alpha, std::uint32_t rho,
         std::uint32_t tau) { return chi(parse_tower(field, k, alpha), rho, tau); },
      py::arg("field"), py::arg("k"), py::arg("alpha"), py::arg("rho_mask"), py::arg("tau_mask"));

  m.def(
      "verify",
      [](const std::string& suite, const std::string& depth, std::uint64_t seed) {
        return to_py(results_to_json(run_suites(suite, VerifyDepth::parse(depth, seed))));
      },
      py::arg("suite") = "all", py::arg("depth") = "exhaustive", py::arg("seed") = 0);

  m.def("regular_size", [](std::int64_t mm, std::int64_t kc) { return to_int(regular_size(mm, kc)); });
  m.def("omega_size", [](std::int64_t mm, std::int64_t k, std::int64_t kc) { return to_int(omega_size(mm, k, kc)); });
  m.def("kummer_size", [](std::int64_t lk, std::int64_t k, std::int64_t kc) { return to_int(kummer_size(lk, k, kc)); });
  m.def("figure_data", [](int kf, const std::string& group, std::int64_t m_max) {
    return to_py(figure_json(figure_data(kf, group, m_max)));
  });
  m.def("table1", [](int kf) {
    py::list rows;
    for (const auto& r : table1(kf)) {
      py::dict d;
      d["group"] = r.group_name;
      d["k"] = r.k;
      d["kc"] = r.kc;
      d["regular"] = r.regular_formula;
      d["omega"] = r.omega_formula;
      rows.append(d);
    }
    return rows;
  });
  m.def("degree432", [] {
    const auto c = degree432_comparison();
    py::dict d;
    d["kummer"] = to_int(c.kummer);
    d["omega"] = to_int(c.omega);
    d["ratio"] = to_int(c.ratio);
    d["note"] = c.note;
    return d;
  });
}
