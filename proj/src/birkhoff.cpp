#include "ohk/birkhoff.hpp"

namespace ohk {

namespace {

// First source preimage of each target op, in source declaration order.
std::map<std::string, std::string> reverse_op_map(const TheoryMorphism& r) {
    std::map<std::string, std::string> rev;
    for (const OpSymbol& o : r.source.ops) {
        const std::string& tgt = r.op_map.at(o.name);
        if (!rev.count(tgt)) rev.emplace(tgt, o.name);
    }
    return rev;
}

void require_surjective(const TheoryMorphism& r) {
    MorphismReport rep = check_morphism(r);
    if (!rep.valid)
        throw std::invalid_argument("invalid theory morphism: " +
                                    (rep.errors.empty() ? "" : rep.errors[0]));
    if (!rep.surjective)
        throw std::invalid_argument(
            "reflection needs a surjective theory morphism");
}

bool axiom_holds(const TCoalgebraModel& m, const Equation& e) {
    return linearize(m, e.lhs, e.nvars) == linearize(m, e.rhs, e.nvars);
}

} // namespace

std::vector<Equation> extra_axioms(const TheoryMorphism& r) {
    require_surjective(r);
    auto rev = reverse_op_map(r);
    std::vector<Equation> extra;
    for (const Equation& te : r.target.eqs) {
        bool covered = false;
        for (const Equation& se : r.source.eqs) {
            if (se.nvars != te.nvars) continue;
            Term l = rename_ops(se.lhs, r.op_map), rr = rename_ops(se.rhs, r.op_map);
            if ((l == te.lhs && rr == te.rhs) || (l == te.rhs && rr == te.lhs))
                covered = true;
        }
        if (!covered)
            extra.push_back(Equation{te.nvars, rename_ops(te.lhs, rev),
                                     rename_ops(te.rhs, rev)});
    }
    return extra;
}

ReflectionResult reflect(const TCoalgebraModel& m, const TheoryMorphism& r) {
    if (!(m.theory == r.source))
        throw std::invalid_argument("model is not over the morphism source");
    std::vector<Equation> extra = extra_axioms(r);

    Subspace gen(m.field(), m.dim());
    for (const Equation& e : extra) {
        Matrix diff = linearize(m, e.lhs, e.nvars) - linearize(m, e.rhs, e.nvars);
        gen = gen.sum(Subspace::from_columns(diff));
    }

    Subspace sat = saturate_t_ideal(m, gen);
    QuotientResult qr = quotient_model(m, sat);

    // Re-key the quotient structure along the morphism; all preimages of
    // one target op must induce the same matrix on the quotient.
    auto rev = reverse_op_map(r);
    TCoalgebraModel reflected;
    reflected.name = qr.model.name;
    reflected.theory = r.target;
    reflected.carrier = qr.model.carrier;
    for (const OpSymbol& o : r.target.ops) {
        auto it = rev.find(o.name);
        if (it == rev.end())
            throw std::logic_error("surjective morphism missing a preimage");
        Matrix induced = qr.model.op(it->second);
        for (const OpSymbol& so : r.source.ops)
            if (r.op_map.at(so.name) == o.name && qr.model.op(so.name) != induced)
                throw std::invalid_argument(
                    "op preimages disagree on the quotient for " + o.name);
        reflected.op_matrices.emplace(o.name, std::move(induced));
    }
    return {std::move(reflected), std::move(qr.projection), std::move(gen),
            std::move(extra)};
}

Subspace radicalator_coideal(const TCoalgebraModel& m) {
    if (m.theory.name != "SKB" || !(m.theory == builtin_theory("SKB")))
        throw std::invalid_argument("radicalator needs a Hopf brace over SKB");
    TheoryMorphism r = identity_on_ops(m.theory, builtin_theory("RadRng"));
    Subspace gen(m.field(), m.dim());
    for (const Equation& e : extra_axioms(r)) {
        Matrix diff = linearize(m, e.lhs, e.nvars) - linearize(m, e.rhs, e.nvars);
        gen = gen.sum(Subspace::from_columns(diff));
    }
    CoidealWitness cw = is_coideal(m, gen);
    if (!cw.ok)
        throw std::logic_error("radicalator is not a coideal: " + cw.witness);
    return gen;
}

ModelHom reflect_factor(const ReflectionResult& res, const ModelHom& h) {
    for (const Equation& e : res.extra)
        if (!axiom_holds(h.target, e))
            throw std::invalid_argument(
                "factorization target fails an extra axiom");
    return factor_through(res.unit, h);
}

CheckReport birkhoff_closure_check(const TheoryMorphism& r, const ModelHom& q) {
    if (!q.is_surjective())
        throw std::invalid_argument("closure check needs a surjective quotient");
    std::vector<Equation> extra = extra_axioms(r);
    for (const Equation& e : extra)
        if (!axiom_holds(q.source, e))
            throw std::invalid_argument("quotient source fails an extra axiom");
    CheckReport rep;
    for (std::size_t i = 0; i < extra.size(); ++i)
        rep.add("extra_axiom_" + std::to_string(i),
                axiom_holds(q.target, extra[i]));
    return rep;
}

} // namespace ohk
