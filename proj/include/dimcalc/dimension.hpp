#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimcalc/intlinalg.hpp"
#include "dimcalc/quantity.hpp"

namespace dimcalc {

/// Ordered, named set of dimensions over a common basis.
class DimSet {
public:
    DimSet() = default;
    explicit DimSet(std::size_t basis_size) : basis_size_(basis_size) {}

    /// Throws DuplicateName or LengthMismatch.
    void add(std::string name, ExpVec dim);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    std::size_t basis_size() const noexcept { return basis_size_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const ExpVec& dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownName.
    std::size_t index_of(std::string_view name) const;

    DimSet subset(const std::vector<std::size_t>& indices) const;
    /// Exponent vectors as matrix columns (basis_size rows).
    IntMatrix matrix() const;

private:
    std::size_t basis_size_ = 0;
    std::vector<std::string> names_;
    std::vector<ExpVec> dims_;
};

/// d^k = prod s_j^{k_j}. Throws DependentColumns if s is not independent.
std::optional<DependenceWitness> depends_on(const ExpVec& d, const DimSet& s);

bool independent_set(const DimSet& s);

std::size_t group_rank(const DimSet& s);

/// All maximal independent subsets of `heads` that avoid `excluded` and on
/// which every head (the excluded one included) depends. Index sets are
/// sorted ascending; the list is ordered by the lexicographic order of each
/// set's complement among the non-excluded heads, so the model whose only
/// dependent is the first eligible head comes first. Throws UnknownName.
std::vector<std::vector<std::size_t>> maximal_independent_subsets_excluding(const DimSet& heads,
                                                                            std::string_view excluded);

} // namespace dimcalc
