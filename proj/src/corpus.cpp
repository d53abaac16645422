#include "ohk/corpus.hpp"

#include <array>
#include <stdexcept>

namespace ohk {

SetModel corpus_cyclic(std::size_t n, const std::string& theory_name) {
    SetModel s;
    s.name = "Z" + std::to_string(n);
    s.theory = builtin_theory(theory_name);
    for (std::size_t i = 0; i < n; ++i) s.elements.push_back("g" + std::to_string(i));
    std::vector<std::size_t> mul(n * n), inv(n);
    for (std::size_t a = 0; a < n; ++a) {
        inv[a] = (n - a) % n;
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    }
    s.op_tables["mul"] = mul;
    s.op_tables["one"] = {0};
    s.op_tables["inv"] = inv;
    return s;
}

SetModel corpus_s3() {
    using Perm = std::array<std::size_t, 3>;
    const std::vector<Perm> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const std::vector<std::string> labels = {"e", "r", "r2", "s", "sr", "sr2"};
    auto index_of = [&](const Perm& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("not a permutation of the list");
    };
    SetModel s;
    s.name = "S3";
    s.theory = builtin_theory("Grp");
    s.elements = labels;
    std::vector<std::size_t> mul(36), inv(6);
    for (std::size_t a = 0; a < 6; ++a) {
        Perm ia{};
        for (std::size_t i = 0; i < 3; ++i) ia[perms[a][i]] = i;
        inv[a] = index_of(ia);
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            mul[a * 6 + b] = index_of(c);
        }
    }
    s.op_tables["mul"] = mul;
    s.op_tables["one"] = {0};
    s.op_tables["inv"] = inv;
    return s;
}

SetModel corpus_trivial_brace(const SetModel& grp) {
    SetModel s;
    s.name = "TrivialBrace(" + grp.name + ")";
    s.theory = builtin_theory("SKB");
    s.elements = grp.elements;
    s.op_tables["add"] = grp.op_tables.at("mul");
    s.op_tables["neg"] = grp.op_tables.at("inv");
    s.op_tables["mul"] = grp.op_tables.at("mul");
    s.op_tables["inv"] = grp.op_tables.at("inv");
    s.op_tables["one"] = {0};
    return s;
}

SetModel corpus_skew_brace6() {
    SetModel s;
    s.name = "B6";
    s.theory = builtin_theory("SKB");
    std::size_t n = 6;
    for (std::size_t i = 0; i < n; ++i) s.elements.push_back("a" + std::to_string(i));
    std::vector<std::size_t> add(n * n), neg(n), mul(n * n), inv(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg[a] = (n - a) % n;
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = (a + b) % n;
            mul[a * n + b] = a % 2 == 0 ? (a + b) % n : (a + n - b % n) % n;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a * n + b] == 0) inv[a] = b;
    s.op_tables["add"] = add;
    s.op_tables["neg"] = neg;
    s.op_tables["mul"] = mul;
    s.op_tables["inv"] = inv;
    s.op_tables["one"] = {0};
    return s;
}

TCoalgebraModel corpus_primitive_f2() {
    Field f2 = Field::Fp(2);
    Matrix delta(f2, 4, 2), eps(f2, 1, 2);
    delta.set(0, 0, Rat(1));
    delta.set(1, 1, Rat(1));
    delta.set(2, 1, Rat(1));
    eps.set(0, 0, Rat(1));

    TCoalgebraModel m;
    m.name = "PrimF2";
    m.theory = builtin_theory("Grp");
    m.carrier = Coalgebra({"1", "x"}, delta, eps);
    Matrix mul(f2, 2, 4); // 1*1=1, 1*x=x*1=x, x*x=0
    mul.set(0, 0, Rat(1));
    mul.set(1, 1, Rat(1));
    mul.set(1, 2, Rat(1));
    Matrix one(f2, 2, 1);
    one.set(0, 0, Rat(1));
    Matrix inv = Matrix::identity(f2, 2); // the antipode is id in characteristic 2
    m.op_matrices = {{"mul", mul}, {"one", one}, {"inv", inv}};
    return m;
}

} // namespace ohk
