#include "dimcalc/analysis.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

#include "dimcalc/error.hpp"

namespace dimcalc {

DimensionalMatrix build_matrix(std::vector<std::string> bases, std::vector<std::pair<std::string, ExpVec>> vars) {
    std::set<std::string> seen;
    for (const auto& b : bases)
        if (!seen.insert(b).second) throw Error(Errc::DuplicateName, "base '" + b + "' declared twice");
    DimSet heads(bases.size());
    for (auto& [name, dim] : vars) heads.add(std::move(name), std::move(dim));
    return DimensionalMatrix(std::move(bases), std::move(heads));
}

std::vector<DimensionalModel> enumerate_models(const DimensionalMatrix& m, std::string_view dependent) {
    const DimSet& heads = m.heads();
    const std::size_t dep = heads.index_of(dependent);
    std::vector<DimensionalModel> models;
    for (const auto& set : maximal_independent_subsets_excluding(heads, dependent)) {
        DimensionalModel model;
        model.dependent = heads.name(dep);
        for (std::size_t i = 0; i < heads.size(); ++i) {
            if (i == dep) continue;
            if (std::binary_search(set.begin(), set.end(), i))
                model.independents.push_back(heads.name(i));
            else
                model.dependents.push_back(heads.name(i));
        }
        models.push_back(std::move(model));
    }
    return models;
}

PiRelation solve_model(const DimensionalMatrix& m, const DimensionalModel& model, std::string phi) {
    const DimSet& heads = m.heads();
    std::vector<std::size_t> seen(heads.size(), 0);
    auto lookup = [&](const std::string& name) {
        auto i = heads.find(name);
        if (!i) throw Error(Errc::ModelInvalid, "'" + name + "' is not a column of the matrix");
        ++seen[*i];
        return *i;
    };
    lookup(model.dependent);
    std::vector<std::size_t> indep;
    for (const auto& n : model.independents) indep.push_back(lookup(n));
    for (const auto& n : model.dependents) lookup(n);
    for (std::size_t i = 0; i < heads.size(); ++i)
        if (seen[i] != 1) throw Error(Errc::ModelInvalid, "model does not partition the columns at '" + heads.name(i) + "'");

    const DimSet basis = heads.subset(indep);
    if (!independent_set(basis)) throw Error(Errc::ModelInvalid, "independent variables are dependent");

    auto witness = [&](const std::string& name) {
        auto w = depends_on(heads.dim(heads.index_of(name)), basis);
        if (!w) throw Error(Errc::ModelInvalid, "'" + name + "' does not depend on the independent variables");
        return std::move(*w);
    };

    PiRelation r;
    r.dependent = model.dependent;
    r.independents = model.independents;
    auto w = witness(model.dependent);
    r.k = std::move(w.k);
    r.k_j = std::move(w.coeffs);
    for (const auto& n : model.dependents) {
        auto wi = witness(n);
        r.rows.push_back(PiRow{n, std::move(wi.k), std::move(wi.coeffs)});
    }
    r.phi = std::move(phi);
    return r;
}

Analysis analyze(const DimensionalMatrix& m, std::string_view dependent) {
    Analysis a;
    a.models = enumerate_models(m, dependent);
    for (std::size_t i = 0; i < a.models.size(); ++i) {
        std::string phi = a.models.size() == 1 ? "Phi" : "Phi" + std::to_string(i + 1);
        a.relations.push_back(solve_model(m, a.models[i], std::move(phi)));
    }
    return a;
}

ExpVec pi_group_dimension(const DimensionalMatrix& m, const PiRelation& r, std::size_t i) {
    const DimSet& heads = m.heads();
    const PiRow& row = r.rows.at(i);
    ExpVec net = row.c * heads.dim(heads.index_of(row.name));
    for (std::size_t j = 0; j < r.independents.size(); ++j)
        net -= row.c_j[j] * heads.dim(heads.index_of(r.independents[j]));
    return net;
}

std::vector<std::string> unused_variables(const PiRelation& r) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < r.independents.size(); ++j) {
        bool used = sgn(r.k_j[j]) != 0;
        for (const auto& row : r.rows) used = used || sgn(row.c_j[j]) != 0;
        if (!used) out.push_back(r.independents[j]);
    }
    return out;
}

std::string_view form_name(RelationForm form) noexcept {
    switch (form) {
    case RelationForm::Power: return "power";
    case RelationForm::Root: return "root";
    case RelationForm::Scalar: return "scalar";
    }
    return "?";
}

namespace {

constexpr std::array<const char*, 10> kSuperscript = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
constexpr std::array<const char*, 10> kSubscript = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

const std::map<std::string, std::string, std::less<>>& greek() {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"alpha", "α"}, {"beta", "β"},   {"gamma", "γ"}, {"delta", "δ"},   {"epsilon", "ε"}, {"zeta", "ζ"},
        {"eta", "η"},   {"theta", "θ"},  {"iota", "ι"},  {"kappa", "κ"},   {"lambda", "λ"},  {"mu", "μ"},
        {"nu", "ν"},    {"xi", "ξ"},     {"rho", "ρ"},   {"sigma", "σ"},   {"tau", "τ"},     {"upsilon", "υ"},
        {"chi", "χ"},   {"psi", "ψ"},    {"omega", "ω"}, {"ell", "ℓ"},
    };
    return table;
}

std::string superscript(const std::string& digits) {
    std::string out;
    for (char ch : digits) out += ch == '-' ? "⁻" : kSuperscript[static_cast<std::size_t>(ch - '0')];
    return out;
}

std::string subscript(const std::string& digits) {
    std::string out;
    for (char ch : digits) out += kSubscript[static_cast<std::size_t>(ch - '0')];
    return out;
}

class Printer {
public:
    explicit Printer(Notation n) : n_(n) {}

    std::string name(const std::string& raw) const {
        if (n_ == Notation::Ascii) return raw;
        std::size_t cut = raw.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(raw[cut - 1]))) --cut;
        std::string stem = raw.substr(0, cut);
        const std::string digits = raw.substr(cut);
        if (!digits.empty() && stem.size() > 1 && stem.back() == '_') stem.pop_back();
        if (auto it = greek().find(stem); it != greek().end()) stem = it->second;
        return stem + subscript(digits);
    }

    std::string factor(const std::string& raw, const Integer& e) const {
        if (e == 1) return name(raw);
        if (n_ == Notation::Ascii) return raw + "^" + e.get_str();
        return name(raw) + superscript(e.get_str());
    }

    std::string factor(const std::string& raw, const Rational& e) const {
        if (e.get_den() == 1) return factor(raw, Integer(e.get_num()));
        return name(raw) + "^(" + e.get_str() + ")";
    }

    // Top-level product of factors.
    std::string product(const std::vector<std::string>& fs) const {
        return join(fs, n_ == Notation::Ascii ? " * " : "·");
    }

    std::string function(const std::string& phi, bool lowercase) const {
        std::size_t cut = phi.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(phi[cut - 1]))) --cut;
        std::string stem = phi.substr(0, cut);
        const std::string digits = phi.substr(cut);
        if (n_ == Notation::Ascii) {
            if (lowercase && !stem.empty()) stem[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(stem[0])));
            return stem + digits;
        }
        if (stem == "Phi") stem = lowercase ? "φ" : "Φ";
        return stem + subscript(digits);
    }

    std::string pi_group(const PiRelation& r, const PiRow& row) const {
        const std::string num = factor(row.name, row.c);
        std::vector<std::string> den;
        for (std::size_t j = 0; j < r.independents.size(); ++j)
            if (sgn(row.c_j[j]) != 0) den.push_back(factor(r.independents[j], row.c_j[j]));
        if (den.empty()) return num;
        if (den.size() == 1) return num + "/" + den.front();
        return num + "/(" + join(den, n_ == Notation::Ascii ? "*" : "") + ")";
    }

    Notation notation() const noexcept { return n_; }

private:
    static std::string join(const std::vector<std::string>& parts, std::string_view sep) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += sep;
            s += parts[i];
        }
        return s;
    }

    Notation n_;
};

} // namespace

std::vector<std::string> render_pi_groups(const PiRelation& r, Notation notation) {
    Printer p(notation);
    std::vector<std::string> out;
    for (const auto& row : r.rows) out.push_back(p.pi_group(r, row));
    return out;
}

RenderedRelation render_relation(const PiRelation& r, RelationForm form, Notation notation) {
    Printer p(notation);
    const bool power = form == RelationForm::Power;

    std::vector<std::string> mono;
    for (std::size_t j = 0; j < r.independents.size(); ++j) {
        if (sgn(r.k_j[j]) == 0) continue;
        if (power) {
            mono.push_back(p.factor(r.independents[j], r.k_j[j]));
        } else {
            Rational e(r.k_j[j], r.k);
            e.canonicalize();
            mono.push_back(p.factor(r.independents[j], e));
        }
    }

    std::string args;
    for (const auto& g : render_pi_groups(r, notation)) args += (args.empty() ? "" : ", ") + g;
    const std::string call = p.function(r.phi, form == RelationForm::Scalar) + "(" + args + ")";

    std::string lhs = power ? p.factor(r.dependent, r.k) : p.name(r.dependent);
    if (power && notation == Notation::Ascii && r.k == 1) lhs += "^1";

    std::vector<std::string> rhs;
    if (notation == Notation::Unicode && r.arity() == 0) {
        rhs.push_back(power ? "K" : "C");
        rhs.insert(rhs.end(), mono.begin(), mono.end());
    } else {
        rhs = mono;
        rhs.push_back(call);
    }
    return RenderedRelation{form, notation, lhs + " = " + p.product(rhs)};
}

bool check_homogeneous(const ExpVec& lhs, const ExpVec& rhs) {
    if (lhs.size() != rhs.size()) throw Error(Errc::LengthMismatch, "exponent vectors of different length");
    return lhs == rhs;
}

} // namespace dimcalc
