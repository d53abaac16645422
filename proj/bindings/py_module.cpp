#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ohk/birkhoff.hpp"
#include "ohk/cat.hpp"
#include "ohk/corpus.hpp"
#include "ohk/io.hpp"

namespace py = pybind11;
using namespace ohk;

namespace {

// Everything crosses the boundary as text: .lth/.lmod/.lhom strings in,
// JSON report strings and .lmod/.lhom strings out.
struct Loaded {
    std::map<std::string, TheoryPresentation> theories;
    std::map<std::string, TCoalgebraModel> models;
    std::vector<std::string> order;
    std::vector<ModelHom> homs;
};

Loaded load(const std::vector<std::string>& theory_texts,
            const std::vector<std::string>& model_texts,
            const std::vector<std::string>& hom_texts) {
    Loaded l;
    for (const std::string& t : theory_texts) {
        TheoryPresentation th = parse_theory(t);
        l.theories.emplace(th.name, std::move(th));
    }
    auto resolve = [&](const std::string& n) {
        auto it = l.theories.find(n);
        return it != l.theories.end() ? it->second : builtin_theory(n);
    };
    for (const std::string& t : model_texts) {
        TCoalgebraModel m = parse_model(t, resolve);
        l.order.push_back(m.name);
        l.models.emplace(m.name, std::move(m));
    }
    for (const std::string& t : hom_texts)
        l.homs.push_back(parse_hom(t, l.models));
    return l;
}

std::string dump(const std::string& command, const CheckReport& rep,
                 const nlohmann::ordered_json& dims = {}) {
    nlohmann::ordered_json j = report_json(command, rep);
    if (!dims.empty()) j["dims"] = dims;
    return j.dump();
}

Field field_of(const std::string& name) { return Field::parse(name); }

} // namespace

PYBIND11_MODULE(_ohk, m) {
    m.doc() = "Exact linearization engine for Lawvere theories and "
              "cocommutative coalgebraic models";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GrouplikeUnresolvedError>(m, "GrouplikeUnresolvedError",
                                                     PyExc_ArithmeticError);

    m.def("builtin_theory_text",
          [](const std::string& name) { return print_theory(builtin_theory(name)); },
          py::arg("name"), "Canonical .lth text of a builtin presentation");

    m.def("check_model",
          [](const std::string& model, std::vector<std::string> theories) {
              Loaded l = load(theories, {model}, {});
              const TCoalgebraModel& mm = l.models.at(l.order.front());
              return dump("check", check_model(mm), {{"dim", mm.dim()}});
          },
          py::arg("model"), py::arg("theories") = std::vector<std::string>{},
          "Full axiom report (JSON) for a .lmod text");

    m.def("check_hom",
          [](std::vector<std::string> models, const std::string& hom) {
              Loaded l = load({}, models, {hom});
              return dump("check_hom", check_hom(l.homs.front()));
          },
          py::arg("models"), py::arg("hom"));

    m.def("kernel",
          [](std::vector<std::string> models, const std::string& hom) {
              Loaded l = load({}, models, {hom});
              ModelHom& f = l.homs.front();
              CheckReport rep = check_hom(f);
              KernelData k = hopf_kernel(f);
              rep.merge(k.closure, "closure.");
              rep.merge(newman_check(f), "newman.");
              return dump("kernel", rep,
                          {{"hopf", k.hopf_kernel.dim()},
                           {"linear", k.linear_kernel.dim()},
                           {"augmentation", k.augmentation_part.dim()}});
          },
          py::arg("models"), py::arg("hom"),
          "Hopf kernel dimensions and the Newman certificate (JSON)");

    m.def("cokernel",
          [](std::vector<std::string> models, const std::string& hom) {
              Loaded l = load({}, models, {hom});
              QuotientResult q = cokernel(l.homs.front());
              CheckReport rep;
              rep.add("projection_verified", q.projection.verified);
              return std::pair(dump("cokernel", rep, {{"dim", q.model.dim()}}),
                               print_model(q.model));
          },
          py::arg("models"), py::arg("hom"),
          "(report JSON, cokernel .lmod text)");

    m.def("factorize",
          [](std::vector<std::string> models, const std::string& hom) {
              Loaded l = load({}, models, {hom});
              const ModelHom& f = l.homs.front();
              Factorization fac = factorize(f);
              CheckReport rep;
              rep.add("epi_surjective", fac.epi.is_surjective());
              rep.add("mono_injective", fac.mono.is_injective());
              rep.add("composite_equals_f",
                      fac.mono.matrix * fac.epi.matrix == f.matrix);
              return std::pair(
                  dump("factorize", rep, {{"middle", fac.middle.dim()}}),
                  print_model(fac.middle));
          },
          py::arg("models"), py::arg("hom"));

    m.def("coequalizer",
          [](std::vector<std::string> models, const std::string& hom_f,
             const std::string& hom_g) {
              Loaded l = load({}, models, {hom_f, hom_g});
              QuotientResult q = coequalizer(l.homs[0], l.homs[1]);
              CheckReport rep;
              rep.add("projection_verified", q.projection.verified);
              return std::pair(dump("coequalizer", rep, {{"dim", q.model.dim()}}),
                               print_model(q.model));
          },
          py::arg("models"), py::arg("hom_f"), py::arg("hom_g"));

    m.def("normal",
          [](std::vector<std::string> models, const std::string& inclusion) {
              Loaded l = load({}, models, {inclusion});
              const ModelHom& inc = l.homs.front();
              NormalityResult res = is_normal(inc.target, image(inc.matrix));
              return dump("normal", res.report,
                          {{"normal", res.normal},
                           {"saturated", res.saturated.dim()},
                           {"product_span", res.product_span.dim()}});
          },
          py::arg("models"), py::arg("inclusion"));

    m.def("reflect",
          [](const std::string& model, const std::string& target_theory,
             std::vector<std::string> theories) {
              Loaded l = load(theories, {model}, {});
              const TCoalgebraModel& mm = l.models.at(l.order.front());
              auto it = l.theories.find(target_theory);
              TheoryPresentation target = it != l.theories.end()
                                              ? it->second
                                              : builtin_theory(target_theory);
              ReflectionResult res =
                  reflect(mm, identity_on_ops(mm.theory, target));
              CheckReport rep;
              rep.add("unit_verified", res.unit.verified);
              return std::pair(
                  dump("reflect", rep,
                       {{"dim", res.reflected.dim()},
                        {"extra_axioms", res.extra.size()},
                        {"unit_bijective", res.unit.is_injective() &&
                                               res.unit.is_surjective()}}),
                  print_model(res.reflected));
          },
          py::arg("model"), py::arg("target_theory"),
          py::arg("theories") = std::vector<std::string>{},
          "(report JSON, reflected .lmod text)");

    m.def("grouplikes",
          [](const std::string& model) {
              Loaded l = load({}, {model}, {});
              const TCoalgebraModel& mm = l.models.at(l.order.front());
              std::vector<std::string> out;
              for (const auto& g : grouplike_vectors(mm))
                  out.push_back(render_vector(g, mm.carrier.basis_labels));
              return out;
          },
          py::arg("model"), "Sparse renderings of all grouplike elements");

    m.def("model_roundtrip",
          [](const std::string& model) { return print_model(parse_model(model)); },
          py::arg("model"), "Canonical reprint of a .lmod text");

    // Corpus builders for quick experiments and tests.
    m.def("cyclic_model",
          [](std::size_t n, const std::string& field) {
              return print_model(lift(corpus_cyclic(n), field_of(field)));
          },
          py::arg("n"), py::arg("field") = "Q");
    m.def("s3_model",
          [](const std::string& field) {
              return print_model(lift(corpus_s3(), field_of(field)));
          },
          py::arg("field") = "Q");
    m.def("skew_brace6_model",
          [](const std::string& field) {
              return print_model(lift(corpus_skew_brace6(), field_of(field)));
          },
          py::arg("field") = "Q");
    m.def("primitive_f2_model",
          [] { return print_model(corpus_primitive_f2()); });
    m.def("z4_to_z2_texts",
          [](const std::string& field) {
              Field f = field_of(field);
              TCoalgebraModel a = lift(corpus_cyclic(4), f);
              TCoalgebraModel b = lift(corpus_cyclic(2), f);
              Matrix mat(f, 2, 4);
              for (std::size_t j = 0; j < 4; ++j) mat.set(j % 2, j, Rat(1));
              return std::tuple(print_model(a), print_model(b),
                                print_hom(ModelHom{"q", a, b, std::move(mat)}));
          },
          py::arg("field") = "Q",
          "(source .lmod, target .lmod, hom .lhom) of the mod-2 surjection");
}
