#include "ohk/io.hpp"

#include <algorithm>
#include <sstream>

namespace ohk {

namespace {

struct Lines {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

// Splits into comment-stripped token rows; parentheses/commas/arrows are
// kept as whole tokens of their own only where they appear glued to words.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == '(' || c == ')' || c == ',' || c == '=' || c == ':') {
            flush();
            out.push_back(std::string(1, c));
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            flush();
            out.push_back("->");
            ++i;
        } else if (c == '+' && cur.empty() &&
                   (i + 1 == line.size() ||
                    std::isspace(static_cast<unsigned char>(line[i + 1])))) {
            out.push_back("+");
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

Lines tokenize_all(const std::string& text) {
    Lines l;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto toks = tokenize(line);
        if (!toks.empty()) l.rows.emplace_back(n, std::move(toks));
    }
    return l;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError(msg, line, 1);
}

// Cursor over one token row.
struct Row {
    std::size_t line;
    const std::vector<std::string>& toks;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) fail(line, "unexpected end of line");
        return toks[pos];
    }
    std::string next() {
        std::string t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (done() || toks[pos] != t)
            fail(line, "expected '" + t + "'" +
                           (done() ? "" : ", got '" + toks[pos] + "'"));
        ++pos;
    }
    void end() {
        if (!done()) fail(line, "trailing tokens from '" + toks[pos] + "'");
    }
};

Rat coeff_of(Row& r, const Field& f) {
    std::string t = r.next();
    try {
        return f.canon(parse_rational(t));
    } catch (const std::invalid_argument&) {
        fail(r.line, "expected a rational coefficient, got '" + t + "'");
    }
}

// ( label [, label]* ) or ().
std::vector<std::string> label_tuple(Row& r) {
    std::vector<std::string> out;
    r.expect("(");
    if (!r.done() && r.peek() == ")") {
        r.next();
        return out;
    }
    out.push_back(r.next());
    while (!r.done() && r.peek() == ",") {
        r.next();
        out.push_back(r.next());
    }
    r.expect(")");
    return out;
}

std::size_t label_index(const std::vector<std::string>& labels,
                        const std::string& l, std::size_t line) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) fail(line, "unknown basis label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

std::string coeff_term(const Rat& c, const std::string& what) {
    return rational_to_string(c) + " " + what;
}

} // namespace

std::string print_model(const TCoalgebraModel& m) {
    const Coalgebra& c = m.carrier;
    std::ostringstream out;
    out << "model " << m.name << " over " << m.field().name() << "\n";
    out << "theory " << m.theory.name << "\n";
    out << "dim " << c.dim << "\n";
    out << "basis";
    for (const std::string& l : c.basis_labels) out << " " << l;
    out << "\n";
    for (std::size_t j = 0; j < c.dim; ++j) {
        out << "delta " << c.basis_labels[j] << " =";
        bool first = true;
        for (std::size_t r = 0; r < c.dim * c.dim; ++r) {
            const Rat& v = c.delta.at(r, j);
            if (v == 0) continue;
            out << (first ? " " : " + ")
                << coeff_term(v, "(" + c.basis_labels[r / c.dim] + "," +
                                     c.basis_labels[r % c.dim] + ")");
            first = false;
        }
        if (first) out << " 0 (" << c.basis_labels[0] << "," << c.basis_labels[0] << ")";
        out << "\n";
    }
    for (std::size_t j = 0; j < c.dim; ++j)
        out << "epsilon " << c.basis_labels[j] << " = "
            << rational_to_string(c.epsilon.at(0, j)) << "\n";
    for (const OpSymbol& o : m.theory.ops) {
        const Matrix& mat = m.op(o.name);
        for (std::size_t col = 0; col < mat.cols(); ++col) {
            auto tuple = decode_index(col, c.dim, o.arity);
            out << "opmap " << o.name << " : (";
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? "," : "") << c.basis_labels[tuple[i]];
            out << ") ->";
            bool first = true;
            for (std::size_t r = 0; r < mat.rows(); ++r) {
                const Rat& v = mat.at(r, col);
                if (v == 0) continue;
                out << (first ? " " : " + ") << coeff_term(v, c.basis_labels[r]);
                first = false;
            }
            if (first) out << " 0 " << c.basis_labels[0];
            out << "\n";
        }
    }
    return out.str();
}

std::string print_set_model(const SetModel& s, Field f) {
    std::ostringstream out;
    out << "model " << s.name << " over " << f.name() << "\n";
    out << "theory " << s.theory.name << "\n";
    out << "setmodel\n";
    out << "elem";
    for (const std::string& e : s.elements) out << " " << e;
    out << "\n";
    for (const OpSymbol& o : s.theory.ops) {
        const auto& table = s.op_tables.at(o.name);
        for (std::size_t col = 0; col < table.size(); ++col) {
            auto tuple = decode_index(col, s.size(), o.arity);
            out << "table " << o.name << " : (";
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? "," : "") << s.elements[tuple[i]];
            out << ") -> " << s.elements[table[col]] << "\n";
        }
    }
    return out.str();
}

TCoalgebraModel parse_model(const std::string& text, const TheoryResolver& resolve) {
    Lines lines = tokenize_all(text);
    if (lines.rows.empty()) fail(1, "empty model file");
    std::size_t at = 0;
    auto row = [&]() -> Row {
        return Row{lines.rows[at].first, lines.rows[at].second};
    };
    auto more = [&] { return at < lines.rows.size(); };

    // Header.
    Row h = row();
    h.expect("model");
    std::string name = h.next();
    h.expect("over");
    Field field = Field::parse(h.next());
    h.end();
    ++at;
    if (!more()) fail(h.line, "missing 'theory' line");
    Row th = row();
    th.expect("theory");
    std::string theory_name = th.next();
    th.end();
    ++at;
    TheoryPresentation theory =
        resolve ? resolve(theory_name) : builtin_theory(theory_name);

    if (!more()) fail(th.line, "missing model body");

    if (row().peek() == "setmodel") {
        ++at;
        SetModel s;
        s.name = name;
        s.theory = theory;
        if (!more() || row().peek() != "elem") fail(th.line, "expected 'elem' list");
        Row er = row();
        er.next();
        while (!er.done()) s.elements.push_back(er.next());
        ++at;
        if (s.elements.empty()) fail(er.line, "empty element list");
        for (const OpSymbol& o : theory.ops) {
            std::size_t n = 1;
            for (std::size_t i = 0; i < o.arity; ++i) n *= s.size();
            s.op_tables[o.name] = std::vector<std::size_t>(n, s.size());
        }
        while (more()) {
            Row r = row();
            r.expect("table");
            std::string op = r.next();
            const OpSymbol& sym = theory.op_or_throw(op);
            r.expect(":");
            auto tuple = label_tuple(r);
            if (tuple.size() != sym.arity)
                fail(r.line, "arity mismatch for '" + op + "'");
            r.expect("->");
            std::size_t res = label_index(s.elements, r.next(), r.line);
            r.end();
            std::vector<std::size_t> idx;
            for (const std::string& l : tuple)
                idx.push_back(label_index(s.elements, l, r.line));
            s.op_tables[op][encode_index(idx, s.size())] = res;
            ++at;
        }
        for (const OpSymbol& o : theory.ops)
            for (std::size_t v : s.op_tables[o.name])
                if (v >= s.size())
                    fail(th.line, "incomplete table for '" + o.name + "'");
        return lift(s, field);
    }

    // Explicit form.
    Row dr = row();
    dr.expect("dim");
    std::size_t dim = 0;
    try {
        dim = std::stoul(dr.next());
    } catch (const std::exception&) {
        fail(dr.line, "expected a dimension");
    }
    dr.end();
    ++at;
    if (dim == 0) fail(dr.line, "dimension must be positive");
    if (!more() || row().peek() != "basis") fail(dr.line, "expected 'basis' line");
    Row br = row();
    br.next();
    std::vector<std::string> labels;
    while (!br.done()) labels.push_back(br.next());
    ++at;
    if (labels.size() != dim) fail(br.line, "basis size does not match dim");

    Matrix delta(field, dim * dim, dim), eps(field, 1, dim);
    std::map<std::string, Matrix> ops;
    std::vector<bool> delta_seen(dim, false), eps_seen(dim, false);

    while (more()) {
        Row r = row();
        std::string kind = r.next();
        if (kind == "delta") {
            std::size_t j = label_index(labels, r.next(), r.line);
            r.expect("=");
            delta_seen[j] = true;
            while (!r.done()) {
                Rat c = coeff_of(r, field);
                auto pair = label_tuple(r);
                if (pair.size() != 2) fail(r.line, "delta terms are pairs");
                std::size_t a = label_index(labels, pair[0], r.line);
                std::size_t b = label_index(labels, pair[1], r.line);
                delta.set(a * dim + b, j,
                          field.add(delta.at(a * dim + b, j), c));
                if (!r.done()) r.expect("+");
            }
        } else if (kind == "epsilon") {
            std::size_t j = label_index(labels, r.next(), r.line);
            r.expect("=");
            eps.set(0, j, coeff_of(r, field));
            eps_seen[j] = true;
            r.end();
        } else if (kind == "opmap") {
            std::string op = r.next();
            const OpSymbol& sym = theory.op_or_throw(op);
            std::size_t ncols = 1;
            for (std::size_t i = 0; i < sym.arity; ++i) ncols *= dim;
            auto [it, _] = ops.try_emplace(op, field, dim, ncols);
            r.expect(":");
            auto tuple = label_tuple(r);
            if (tuple.size() != sym.arity)
                fail(r.line, "arity mismatch for '" + op + "'");
            std::vector<std::size_t> idx;
            for (const std::string& l : tuple)
                idx.push_back(label_index(labels, l, r.line));
            std::size_t col = encode_index(idx, dim);
            r.expect("->");
            while (!r.done()) {
                Rat c = coeff_of(r, field);
                std::size_t tgt = label_index(labels, r.next(), r.line);
                it->second.set(tgt, col, field.add(it->second.at(tgt, col), c));
                if (!r.done()) r.expect("+");
            }
        } else {
            fail(r.line, "unknown directive '" + kind + "'");
        }
        ++at;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (!delta_seen[j]) fail(br.line, "missing delta for '" + labels[j] + "'");
        if (!eps_seen[j]) fail(br.line, "missing epsilon for '" + labels[j] + "'");
    }
    for (const OpSymbol& o : theory.ops)
        if (!ops.count(o.name))
            fail(br.line, "missing opmap for '" + o.name + "'");

    TCoalgebraModel m;
    m.name = name;
    m.theory = std::move(theory);
    m.carrier = Coalgebra(std::move(labels), std::move(delta), std::move(eps));
    m.op_matrices = std::move(ops);
    m.validate();
    return m;
}

std::string print_hom(const ModelHom& h) {
    std::ostringstream out;
    out << "hom " << h.name << " : " << h.source.name << " -> " << h.target.name
        << "\n";
    for (std::size_t j = 0; j < h.source.dim(); ++j) {
        out << "send " << h.source.carrier.basis_labels[j] << " =";
        bool first = true;
        for (std::size_t r = 0; r < h.target.dim(); ++r) {
            const Rat& v = h.matrix.at(r, j);
            if (v == 0) continue;
            out << (first ? " " : " + ")
                << coeff_term(v, h.target.carrier.basis_labels[r]);
            first = false;
        }
        if (first) out << " 0 " << h.target.carrier.basis_labels[0];
        out << "\n";
    }
    return out.str();
}

ModelHom parse_hom(const std::string& text,
                   const std::map<std::string, TCoalgebraModel>& models) {
    Lines lines = tokenize_all(text);
    if (lines.rows.empty()) fail(1, "empty hom file");
    Row h{lines.rows[0].first, lines.rows[0].second};
    h.expect("hom");
    std::string name = h.next();
    h.expect(":");
    std::string sa = h.next();
    h.expect("->");
    std::string sb = h.next();
    h.end();
    auto ia = models.find(sa), ib = models.find(sb);
    if (ia == models.end()) fail(h.line, "unknown model '" + sa + "'");
    if (ib == models.end()) fail(h.line, "unknown model '" + sb + "'");
    const TCoalgebraModel& a = ia->second;
    const TCoalgebraModel& b = ib->second;
    a.field().require_same(b.field());

    Matrix mat(a.field(), b.dim(), a.dim());
    std::vector<bool> seen(a.dim(), false);
    for (std::size_t i = 1; i < lines.rows.size(); ++i) {
        Row r{lines.rows[i].first, lines.rows[i].second};
        r.expect("send");
        std::size_t j = label_index(a.carrier.basis_labels, r.next(), r.line);
        r.expect("=");
        seen[j] = true;
        while (!r.done()) {
            Rat c = coeff_of(r, a.field());
            std::size_t tgt =
                label_index(b.carrier.basis_labels, r.next(), r.line);
            mat.set(tgt, j, a.field().add(mat.at(tgt, j), c));
            if (!r.done()) r.expect("+");
        }
    }
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (!seen[j])
            fail(h.line, "missing send for '" + a.carrier.basis_labels[j] + "'");
    return ModelHom{std::move(name), a, b, std::move(mat)};
}

nlohmann::ordered_json report_json(const std::string& command,
                                   const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["ok"] = rep.ok();
    auto checks = nlohmann::ordered_json::array();
    for (const CheckEntry& e : rep.entries) {
        nlohmann::ordered_json c;
        c["name"] = e.name;
        c["status"] = e.status == CheckStatus::Pass   ? "pass"
                      : e.status == CheckStatus::Fail ? "fail"
                                                      : "error";
        if (!e.witness.empty()) {
            // The witness is a sparse rendering "c1*l1 + c2*l2 + ..."; split
            // back into coefficient/label pairs for machine consumption.
            auto terms = nlohmann::ordered_json::array();
            std::istringstream in(e.witness);
            std::string tok;
            while (std::getline(in, tok, '+')) {
                // trim
                std::size_t b = tok.find_first_not_of(' ');
                std::size_t f = tok.find_last_not_of(' ');
                if (b == std::string::npos) continue;
                tok = tok.substr(b, f - b + 1);
                std::size_t star = tok.find('*');
                nlohmann::ordered_json t;
                if (star == std::string::npos) {
                    t["coeff"] = tok;
                    t["label"] = "";
                } else {
                    t["coeff"] = tok.substr(0, star);
                    t["label"] = tok.substr(star + 1);
                }
                terms.push_back(std::move(t));
            }
            c["witness"] = std::move(terms);
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string report_text(const CheckReport& rep) {
    std::ostringstream out;
    for (const CheckEntry& e : rep.entries) {
        out << (e.status == CheckStatus::Pass   ? "pass"
                : e.status == CheckStatus::Fail ? "FAIL"
                                                : "ERROR")
            << "  " << e.name;
        if (!e.witness.empty()) out << "  [" << e.witness << "]";
        out << "\n";
    }
    return out.str();
}

} // namespace ohk
