#include "dimcalc/dimension.hpp"

#include <algorithm>

#include "dimcalc/error.hpp"

namespace dimcalc {

void DimSet::add(std::string name, ExpVec dim) {
    if (dim.size() != basis_size_)
        throw Error(Errc::LengthMismatch, "dimension of '" + name + "' has " + std::to_string(dim.size()) +
                                              " exponents, expected " + std::to_string(basis_size_));
    if (find(name)) throw Error(Errc::DuplicateName, "'" + name + "' declared twice");
    names_.push_back(std::move(name));
    dims_.push_back(std::move(dim));
}

std::optional<std::size_t> DimSet::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t DimSet::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error(Errc::UnknownName, "no dimension named '" + std::string(name) + "'");
    return *i;
}

DimSet DimSet::subset(const std::vector<std::size_t>& indices) const {
    DimSet out(basis_size_);
    for (auto i : indices) {
        if (i >= size()) throw Error(Errc::IndexOutOfRange, "dimension index " + std::to_string(i));
        out.add(names_[i], dims_[i]);
    }
    return out;
}

IntMatrix DimSet::matrix() const {
    std::vector<IntVector> cols;
    cols.reserve(dims_.size());
    for (const auto& d : dims_) cols.push_back(d.values());
    return IntMatrix::from_columns(cols, basis_size_);
}

std::optional<DependenceWitness> depends_on(const ExpVec& d, const DimSet& s) {
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < s.size(); ++i) cols.push_back(s.dim(i).values());
    if (d.size() != s.basis_size() && !s.empty())
        throw Error(Errc::LengthMismatch, "dimension length differs from the set's basis size");
    return solve_dependence(d.values(), cols);
}

bool independent_set(const DimSet& s) { return group_rank(s) == s.size(); }

std::size_t group_rank(const DimSet& s) { return rank_int(s.matrix()); }

namespace {

// Calls visit(indices) for each r-subset of pool, in lexicographic order.
template <class Visit>
void for_each_combination(const std::vector<std::size_t>& pool, std::size_t r, Visit visit) {
    if (r > pool.size()) return;
    std::vector<std::size_t> pos(r);
    for (std::size_t i = 0; i < r; ++i) pos[i] = i;
    std::vector<std::size_t> pick(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) pick[i] = pool[pos[i]];
        visit(pick);
        std::size_t i = r;
        while (i > 0 && pos[i - 1] == pool.size() - r + (i - 1)) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < r; ++j) pos[j] = pos[j - 1] + 1;
    }
}

} // namespace

std::vector<std::vector<std::size_t>> maximal_independent_subsets_excluding(const DimSet& heads,
                                                                            std::string_view excluded) {
    const std::size_t ex = heads.index_of(excluded);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < heads.size(); ++i)
        if (i != ex) pool.push_back(i);

    const IntMatrix all = heads.matrix();
    const std::size_t r = rank_int(all.select_columns(pool));

    struct Candidate {
        std::vector<std::size_t> members;
        std::vector<std::size_t> complement;
    };
    std::vector<Candidate> found;
    for_each_combination(pool, r, [&](const std::vector<std::size_t>& pick) {
        if (!columns_independent(all, pick)) return;
        // Rank r means every other non-excluded head already lies in the span;
        // only the excluded head needs checking.
        if (!depends_on(heads.dim(ex), heads.subset(pick))) return;
        Candidate c{pick, {}};
        std::set_difference(pool.begin(), pool.end(), pick.begin(), pick.end(), std::back_inserter(c.complement));
        found.push_back(std::move(c));
    });
    std::sort(found.begin(), found.end(),
              [](const Candidate& a, const Candidate& b) { return a.complement < b.complement; });

    std::vector<std::vector<std::size_t>> out;
    out.reserve(found.size());
    for (auto& c : found) out.push_back(std::move(c.members));
    return out;
}

} // namespace dimcalc
