#include "dimcalc/report.hpp"

#include <limits>

namespace dimcalc {

namespace {

nlohmann::ordered_json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

nlohmann::ordered_json vector_json(const IntVector& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(integer_json(x));
    return arr;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string witness_text(const char* prefix, const std::string& lhs, const Integer& k,
                         const std::vector<std::string>& names, const IntVector& coeffs) {
    std::string s = prefix + lhs + "=" + k.get_str();
    for (std::size_t j = 0; j < names.size(); ++j) s += ", " + (prefix + names[j]) + "=" + coeffs[j].get_str();
    return s;
}

} // namespace

Report analyze_problem(const ProblemFile& problem) {
    Report r;
    r.problem = problem;
    const DimensionalMatrix m = problem.matrix();
    r.rank = m.rank();
    const Analysis a = analyze(m, problem.dependent);
    for (std::size_t i = 0; i < a.models.size(); ++i) {
        const PiRelation& rel = a.relations[i];
        ModelReport mr{a.models[i],
                       rel,
                       render_pi_groups(rel),
                       render_relation(rel, RelationForm::Power).text,
                       render_relation(rel, RelationForm::Root).text,
                       render_relation(rel, RelationForm::Scalar).text,
                       render_relation(rel, RelationForm::Power, Notation::Unicode).text,
                       render_relation(rel, RelationForm::Root, Notation::Unicode).text};
        for (const auto& name : unused_variables(rel))
            r.diagnostics.push_back("model " + std::to_string(i + 1) + ": " + rel.dependent + " does not depend on " +
                                    name);
        r.models.push_back(std::move(mr));
    }
    if (r.models.empty())
        r.diagnostics.push_back("no covariant representation: " + problem.dependent +
                                " is not dependent on any maximal independent set of the other variables");
    return r;
}

int exit_code(const Report& report) noexcept { return report.models.empty() ? kExitNoModel : kExitOk; }

std::string render_text(const Report& report) {
    const ProblemFile& p = report.problem;
    std::string out = "dimensional matrix (rows: " + join(p.bases, " ") + ")\n";
    for (const auto& v : p.vars) {
        out += "  " + v.name + (v.name == p.dependent ? " [dependent]" : "") + " : " +
               format_dim_expr(p.bases, v.dim) + " " + to_string(v.dim) + "\n";
    }
    out += "rank: " + std::to_string(report.rank) + "\n";
    out += "models: " + std::to_string(report.models.size()) + "\n";
    for (std::size_t i = 0; i < report.models.size(); ++i) {
        const ModelReport& mr = report.models[i];
        const PiRelation& rel = mr.relation;
        out += "\nmodel " + std::to_string(i + 1) + "\n";
        out += "  independents: " + join(mr.model.independents, " ") + "\n";
        out += "  dependents:   " + (mr.model.dependents.empty() ? std::string("(none)") : join(mr.model.dependents, " ")) + "\n";
        out += "  solution:     " + witness_text("k_", rel.dependent, rel.k, rel.independents, rel.k_j) + "\n";
        for (const auto& row : rel.rows)
            out += "  solution:     " + witness_text("c_", row.name, row.c, rel.independents, row.c_j) + "\n";
        out += "  pi groups:    " + (mr.pi_groups.empty() ? std::string("(none)") : join(mr.pi_groups, ", ")) + "\n";
        out += "  power form:   " + mr.display_power + "\n";
        out += "  root form:    " + mr.display_root + "\n";
        out += "  scalar form:  " + mr.relation_scalar + "\n";
    }
    if (!report.diagnostics.empty()) {
        out += "\n";
        for (const auto& d : report.diagnostics) out += "note: " + d + "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const Report& report) {
    using json = nlohmann::ordered_json;
    const ProblemFile& p = report.problem;
    json j;
    j["bases"] = p.bases;
    j["variables"] = json::array();
    for (const auto& v : p.vars) j["variables"].push_back(json{{"name", v.name}, {"dimension", vector_json(v.dim.values())}});
    j["dependent"] = p.dependent;
    j["rank"] = report.rank;
    j["models"] = json::array();
    for (const auto& mr : report.models) {
        const PiRelation& rel = mr.relation;
        json m;
        m["independents"] = mr.model.independents;
        m["dependents"] = mr.model.dependents;
        m["k"] = integer_json(rel.k);
        m["k_j"] = vector_json(rel.k_j);
        m["rows"] = json::array();
        for (const auto& row : rel.rows)
            m["rows"].push_back(json{{"name", row.name}, {"c", integer_json(row.c)}, {"c_j", vector_json(row.c_j)}});
        m["pi_groups"] = mr.pi_groups;
        m["relation_power"] = mr.relation_power;
        m["relation_root"] = mr.relation_root;
        m["relation_scalar"] = mr.relation_scalar;
        j["models"].push_back(std::move(m));
    }
    j["diagnostics"] = report.diagnostics;
    return j;
}

std::string emit_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

} // namespace dimcalc
