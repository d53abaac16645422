#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ohk/birkhoff.hpp"
#include "ohk/cat.hpp"
#include "ohk/corpus.hpp"
#include "ohk/io.hpp"

namespace fs = std::filesystem;
using namespace ohk;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

/// Everything named by the input paths: theories, then models (resolving
/// theory names first against the loaded .lth files, then the builtins),
/// then homs against the loaded models.
struct Workspace {
    std::map<std::string, TheoryPresentation> theories;
    std::map<std::string, TCoalgebraModel> models;
    std::vector<std::string> model_order;
    std::vector<ModelHom> homs;

    TheoryPresentation resolve_theory(const std::string& name) const {
        auto it = theories.find(name);
        return it != theories.end() ? it->second : builtin_theory(name);
    }
    const TCoalgebraModel& first_model() const {
        if (model_order.empty()) throw std::runtime_error("no .lmod input given");
        return models.at(model_order.front());
    }
    const ModelHom& hom(std::size_t i = 0) const {
        if (homs.size() <= i)
            throw std::runtime_error("expected at least " + std::to_string(i + 1) +
                                     " .lhom input(s)");
        return homs[i];
    }
    const ModelHom& hom_named(const std::string& name) const {
        for (const ModelHom& h : homs)
            if (h.name == name) return h;
        throw std::runtime_error("no hom named '" + name + "' among the inputs");
    }
};

Workspace load(std::vector<std::string> paths) {
    // Directories stand for their .lth/.lmod/.lhom contents.
    std::vector<std::string> expanded;
    for (const std::string& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> inner;
            for (const auto& e : fs::directory_iterator(p))
                inner.push_back(e.path().string());
            std::sort(inner.begin(), inner.end());
            expanded.insert(expanded.end(), inner.begin(), inner.end());
        } else {
            expanded.push_back(p);
        }
    }
    auto with_ext = [&](const std::string& ext) {
        std::vector<std::string> out;
        for (const std::string& p : expanded)
            if (fs::path(p).extension() == ext) out.push_back(p);
        return out;
    };
    Workspace w;
    for (const std::string& p : with_ext(".lth")) {
        TheoryPresentation t = parse_theory(slurp(p));
        w.theories.emplace(t.name, std::move(t));
    }
    for (const std::string& p : with_ext(".lmod")) {
        TCoalgebraModel m = parse_model(
            slurp(p), [&](const std::string& n) { return w.resolve_theory(n); });
        w.model_order.push_back(m.name);
        w.models.emplace(m.name, std::move(m));
    }
    for (const std::string& p : with_ext(".lhom"))
        w.homs.push_back(parse_hom(slurp(p), w.models));
    return w;
}

struct Output {
    bool json = false;
    std::string out_path;
};

/// Prints the report (and optional artifact), returns the exit code.
int finish(const std::string& command, const CheckReport& rep,
           const nlohmann::ordered_json& dims, const Output& o,
           const std::string& artifact = "") {
    if (o.json) {
        nlohmann::ordered_json j = report_json(command, rep);
        if (!dims.empty()) j["dims"] = dims;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report_text(rep);
        for (auto it = dims.begin(); it != dims.end(); ++it)
            std::cout << it.key() << " = " << it.value().dump() << "\n";
        std::cout << (rep.ok() ? "OK" : "FAILED: " + rep.first_failure()) << "\n";
    }
    if (!o.out_path.empty() && !artifact.empty()) spit(o.out_path, artifact);
    return rep.ok() ? 0 : 1;
}

int cmd_check(const Workspace& w, const Output& o) {
    const TCoalgebraModel& m = w.first_model();
    CheckReport rep = check_model(m);
    return finish("check", rep, {{"dim", m.dim()}}, o, print_model(m));
}

int cmd_kernel(const Workspace& w, const Output& o) {
    ModelHom f = w.hom();
    CheckReport rep = check_hom(f);
    KernelData k = hopf_kernel(f);
    rep.merge(k.closure, "closure.");
    rep.merge(newman_check(f), "newman.");
    nlohmann::ordered_json dims = {{"hopf", k.hopf_kernel.dim()},
                                   {"linear", k.linear_kernel.dim()},
                                   {"augmentation", k.augmentation_part.dim()}};
    return finish("kernel", rep, dims, o);
}

int cmd_cokernel(const Workspace& w, const Output& o) {
    ModelHom f = w.hom();
    CheckReport rep = check_hom(f);
    QuotientResult q = cokernel(f);
    rep.add("projection_verified", q.projection.verified);
    rep.merge(check_model(q.model), "cokernel.");
    return finish("cokernel", rep, {{"dim", q.model.dim()}}, o,
                  print_model(q.model));
}

int cmd_factorize(const Workspace& w, const Output& o) {
    ModelHom f = w.hom();
    CheckReport rep = check_hom(f);
    Factorization fac = factorize(f);
    rep.add("epi_surjective", fac.epi.is_surjective());
    rep.add("mono_injective", fac.mono.is_injective());
    rep.add("composite_equals_f", fac.mono.matrix * fac.epi.matrix == f.matrix);
    return finish("factorize", rep, {{"middle", fac.middle.dim()}}, o,
                  print_model(fac.middle));
}

int cmd_coequalizer(const Workspace& w, const Output& o) {
    ModelHom f = w.hom(0), g = w.hom(1);
    CheckReport rep = check_hom(f);
    rep.merge(check_hom(g), "second.");
    QuotientResult q = coequalizer(f, g);
    rep.add("projection_verified", q.projection.verified);
    return finish("coequalizer", rep, {{"dim", q.model.dim()}}, o,
                  print_model(q.model));
}

int cmd_normal(const Workspace& w, const Output& o) {
    ModelHom inc = w.hom();
    CheckReport rep = check_hom(inc);
    rep.add("inclusion_injective", inc.is_injective());
    NormalityResult res = is_normal(inc.target, image(inc.matrix));
    rep.merge(res.report, "");
    nlohmann::ordered_json dims = {{"saturated", res.saturated.dim()},
                                   {"product_span", res.product_span.dim()},
                                   {"normal", res.normal}};
    return finish("normal", rep, dims, o);
}

int cmd_reflect(const Workspace& w, const std::string& target_theory,
                const Output& o) {
    const TCoalgebraModel& m = w.first_model();
    TheoryPresentation target = w.resolve_theory(target_theory);
    TheoryMorphism r = identity_on_ops(m.theory, target);
    ReflectionResult res = reflect(m, r);
    CheckReport rep;
    rep.add("unit_verified", res.unit.verified);
    rep.merge(check_model(res.reflected), "reflected.");
    nlohmann::ordered_json dims = {{"dim", res.reflected.dim()},
                                   {"extra_axioms", res.extra.size()},
                                   {"unit_bijective", res.unit.is_injective() &&
                                                          res.unit.is_surjective()}};
    return finish("reflect", rep, dims, o, print_model(res.reflected));
}

int cmd_grouplikes(const Workspace& w, const Output& o) {
    const TCoalgebraModel& m = w.first_model();
    auto gs = grouplike_vectors(m);
    CheckReport rep;
    for (std::size_t i = 0; i < gs.size(); ++i)
        rep.entries.push_back({"grouplike." + std::to_string(i),
                               CheckStatus::Pass,
                               render_vector(gs[i], m.carrier.basis_labels)});
    return finish("grouplikes", rep, {{"count", gs.size()}}, o);
}

int cmd_ssfl(const Workspace& w, const Output& o) {
    SplitDiagram d{w.hom_named("k"),  w.hom_named("p"),  w.hom_named("s"),
                   w.hom_named("kp"), w.hom_named("pp"), w.hom_named("sp"),
                   w.hom_named("f"),  w.hom_named("g"),  w.hom_named("h")};
    CheckReport rep = verify_split_diagram(d);
    ProtoTerms pt = proto_terms_for(d.p.source.theory);
    SsflResult res = ssfl_reconstruct(d, pt);
    rep.merge(res.report, "ssfl.");
    return finish("ssfl", rep, {{"dim", d.p.source.dim()}}, o,
                  print_hom(res.g_prime));
}

void write_theories(const fs::path& dir) {
    for (const std::string& n : {"Mon", "Grp", "Ab", "SKB", "DiGrp", "RadRng"})
        spit(dir / (std::string(n) + ".lth"), print_theory(builtin_theory(n)));
}

void write_models(const fs::path& dir, Field f) {
    // The trivial model K over Q and over F_2.
    SetModel one = corpus_cyclic(1);
    one.name = "K";
    spit(dir / "K_Q.lmod", print_model(lift(one, Field::Q())));
    one.name = "K_F2";
    spit(dir / "K_F2.lmod", print_model(lift(one, Field::Fp(2))));
    // Group algebras.
    std::map<std::size_t, TCoalgebraModel> cyclic;
    for (std::size_t n = 2; n <= 6; ++n) {
        TCoalgebraModel m = lift(corpus_cyclic(n), f);
        spit(dir / ("KZ" + std::to_string(n) + ".lmod"), print_model(m));
        cyclic.emplace(n, std::move(m));
    }
    spit(dir / "KS3.lmod", print_model(lift(corpus_s3(), f)));
    // K[Z/4] -> K[Z/2] from the mod-2 surjection.
    {
        Matrix mat(f, 2, 4);
        for (std::size_t j = 0; j < 4; ++j) mat.set(j % 2, j, Rat(1));
        spit(dir / "z4_to_z2.lhom",
             print_hom(ModelHom{"q", cyclic.at(4), cyclic.at(2), std::move(mat)}));
    }
    // Braces, in setmodel form to exercise both grammars.
    spit(dir / "brace_z3.lmod",
         print_set_model(corpus_trivial_brace(corpus_cyclic(3)), f));
    spit(dir / "brace_s3.lmod",
         print_set_model(corpus_trivial_brace(corpus_s3()), f));
    spit(dir / "B6.lmod", print_set_model(corpus_skew_brace6(), f));
    spit(dir / "PrimF2.lmod", print_model(corpus_primitive_f2()));
}

ModelHom identity_hom_named(const TCoalgebraModel& m, const std::string& name) {
    ModelHom h = identity_hom(m);
    h.name = name;
    return h;
}

void write_ssfl(const fs::path& dir, Field f) {
    fs::create_directories(dir);
    TCoalgebraModel a = lift(corpus_cyclic(3), f);
    a.name = "KZ3";
    TCoalgebraModel b = lift(corpus_s3(), f);
    b.name = "KS3";
    TCoalgebraModel c = lift(corpus_cyclic(2), f);
    c.name = "KZ2";
    spit(dir / "A.lmod", print_model(a));
    spit(dir / "B.lmod", print_model(b));
    spit(dir / "C.lmod", print_model(c));
    auto perm_hom = [&](const std::string& name, const TCoalgebraModel& s,
                        const TCoalgebraModel& t,
                        const std::vector<std::size_t>& map) {
        Matrix mat(f, t.dim(), s.dim());
        for (std::size_t j = 0; j < map.size(); ++j) mat.set(map[j], j, Rat(1));
        return ModelHom{name, s, t, std::move(mat)};
    };
    // A3 = {e, r, r2} inside S3; p is the sign map with section e -> e, 1 -> s.
    ModelHom k = perm_hom("k", a, b, {0, 1, 2});
    ModelHom p = perm_hom("p", b, c, {0, 0, 0, 1, 1, 1});
    ModelHom s = perm_hom("s", c, b, {0, 3});
    for (const auto* h : {&k, &p, &s})
        spit(dir / (h->name + ".lhom"), print_hom(*h));
    for (const std::string& n : {"kp", "pp", "sp"}) {
        const ModelHom& base = n == "kp" ? k : n == "pp" ? p : s;
        ModelHom copy = base;
        copy.name = n;
        spit(dir / (n + ".lhom"), print_hom(copy));
    }
    spit(dir / "f.lhom", print_hom(identity_hom_named(a, "f")));
    spit(dir / "g.lhom", print_hom(identity_hom_named(b, "g")));
    spit(dir / "h.lhom", print_hom(identity_hom_named(c, "h")));
}

int cmd_corpus(const std::string& name, const std::string& out_dir, Field f) {
    fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(dir);
    if (name == "paper-table") {
        write_theories(dir);
    } else if (name == "models") {
        write_models(dir, f);
    } else if (name == "s3-ssfl") {
        write_ssfl(dir / "s3-ssfl", f);
    } else if (name == "all") {
        write_theories(dir);
        write_models(dir, f);
        write_ssfl(dir / "s3-ssfl", f);
    } else {
        throw std::runtime_error("unknown corpus name '" + name + "'");
    }
    std::cout << "corpus '" << name << "' written to " << dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ohk: exact linearization engine for Lawvere theories and "
                 "coalgebraic models"};
    app.require_subcommand(1);

    std::string field_name = "Q", out_path, target_theory, corpus_name;
    bool json = false;
    app.add_option("--field", field_name, "Ground field: Q or F<p>");
    app.add_option("--out", out_path, "Write the computed object here");
    app.add_flag("--json", json, "Emit the report as JSON");

    std::map<std::string, std::vector<std::string>> paths;
    auto add_cmd = [&](const std::string& n, const std::string& desc) {
        CLI::App* c = app.add_subcommand(n, desc);
        c->fallthrough();
        c->add_option("paths", paths[n], "Input .lth/.lmod/.lhom files");
        return c;
    };
    add_cmd("check", "Verify all axioms of a model");
    add_cmd("kernel", "Hopf kernel and Newman check of a hom");
    add_cmd("cokernel", "Cokernel of a hom");
    add_cmd("factorize", "Regular epi-mono factorization of a hom");
    add_cmd("coequalizer", "Coequalizer of a parallel pair of homs");
    add_cmd("normal", "Normality test for a subobject inclusion");
    CLI::App* refl = add_cmd("reflect", "Birkhoff reflection of a model");
    refl->add_option("--to", target_theory, "Target theory name")->required();
    add_cmd("grouplikes", "Enumerate the grouplike elements of a model");
    add_cmd("ssfl", "Split short five reconstruction on a diagram bundle");
    CLI::App* corp = app.add_subcommand("corpus", "Write the builtin fixtures");
    corp->fallthrough();
    corp->add_option("name", corpus_name, "paper-table | models | s3-ssfl | all")
        ->required();

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    Output o{json, out_path};

    try {
        if (cmd == "corpus")
            return cmd_corpus(corpus_name, out_path, Field::parse(field_name));
        Workspace w = load(paths[cmd]);
        if (cmd == "check") return cmd_check(w, o);
        if (cmd == "kernel") return cmd_kernel(w, o);
        if (cmd == "cokernel") return cmd_cokernel(w, o);
        if (cmd == "factorize") return cmd_factorize(w, o);
        if (cmd == "coequalizer") return cmd_coequalizer(w, o);
        if (cmd == "normal") return cmd_normal(w, o);
        if (cmd == "reflect") return cmd_reflect(w, target_theory, o);
        if (cmd == "grouplikes") return cmd_grouplikes(w, o);
        if (cmd == "ssfl") return cmd_ssfl(w, o);
        std::cerr << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
