#pragma once

// Dimensional matrices, dimensional models and Pi-theorem relations.
//
// A dimensional model splits the column heads of a matrix into the dependent
// variable, a maximal independent set not containing it, and the remaining
// heads. Solving a model yields the canonical witness (k; k_j) for the
// dependent variable and one (c_i; c_ij) row per remaining head, which
// together give the relation
//
//     p^k = prod_j q_j^{k_j} * Phi(Pi_1, ..., Pi_m),   Pi_i = p_i^{c_i} / prod_j q_j^{c_ij}.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dimcalc/dimension.hpp"
#include "dimcalc/intlinalg.hpp"
#include "dimcalc/quantity.hpp"

namespace dimcalc {

class DimensionalMatrix {
public:
    DimensionalMatrix(std::vector<std::string> base_names, DimSet heads)
        : base_names_(std::move(base_names)), heads_(std::move(heads)) {}

    const std::vector<std::string>& base_names() const noexcept { return base_names_; }
    const DimSet& heads() const noexcept { return heads_; }
    std::size_t rows() const noexcept { return base_names_.size(); }
    std::size_t cols() const noexcept { return heads_.size(); }
    IntMatrix matrix() const { return heads_.matrix(); }
    std::size_t rank() const { return rank_int(matrix()); }

private:
    std::vector<std::string> base_names_;
    DimSet heads_;
};

/// Columns keep declaration order. Throws DuplicateName or LengthMismatch.
DimensionalMatrix build_matrix(std::vector<std::string> bases, std::vector<std::pair<std::string, ExpVec>> vars);

struct DimensionalModel {
    std::string dependent;
    std::vector<std::string> dependents;   // remaining heads, declaration order
    std::vector<std::string> independents; // declaration order

    friend bool operator==(const DimensionalModel&, const DimensionalModel&) = default;
};

struct PiRow {
    std::string name;
    Integer c;
    IntVector c_j; // aligned with PiRelation::independents

    friend bool operator==(const PiRow&, const PiRow&) = default;
};

struct PiRelation {
    std::string dependent;
    Integer k;
    std::vector<std::string> independents;
    IntVector k_j;
    std::vector<PiRow> rows;
    std::string phi = "Phi";

    std::size_t arity() const noexcept { return rows.size(); }

    friend bool operator==(const PiRelation&, const PiRelation&) = default;
};

/// One model per member of the maximal-independent-set family, in that
/// family's order. An empty result means the dependent variable has no
/// covariant representation over these heads. Throws UnknownName.
std::vector<DimensionalModel> enumerate_models(const DimensionalMatrix& m, std::string_view dependent);

/// Throws ModelInvalid if the model does not partition the heads, its
/// independents are dependent, or some head fails to depend on them.
PiRelation solve_model(const DimensionalMatrix& m, const DimensionalModel& model, std::string phi = "Phi");

struct Analysis {
    std::vector<DimensionalModel> models;
    std::vector<PiRelation> relations;
};

/// Enumerate and solve every model. The undetermined function is called Phi
/// when there is exactly one model and Phi1, Phi2, ... otherwise.
Analysis analyze(const DimensionalMatrix& m, std::string_view dependent);

/// Net exponent vector of the i-th Pi group; zero for every solved model.
ExpVec pi_group_dimension(const DimensionalMatrix& m, const PiRelation& r, std::size_t i);

/// Independent variables that appear neither in the monomial nor in any Pi group.
std::vector<std::string> unused_variables(const PiRelation& r);

enum class RelationForm { Power, Root, Scalar };
enum class Notation { Ascii, Unicode };

std::string_view form_name(RelationForm form) noexcept;

struct RenderedRelation {
    RelationForm form;
    Notation notation;
    std::string text;
};

/// Power form: dep^k = monomial * Phi(...). Root form: dep = monomial^(1/k) * Phi(...)
/// with reduced fractional exponents. Scalar form is the root form over
/// measures, written with a lowercase function symbol. Roots are never
/// evaluated. In Unicode notation a nullary function is written as the
/// constant K (power form) or C (root and scalar forms).
RenderedRelation render_relation(const PiRelation& r, RelationForm form, Notation notation = Notation::Ascii);

std::vector<std::string> render_pi_groups(const PiRelation& r, Notation notation = Notation::Ascii);

/// Throws LengthMismatch.
bool check_homogeneous(const ExpVec& lhs, const ExpVec& rhs);

} // namespace dimcalc
