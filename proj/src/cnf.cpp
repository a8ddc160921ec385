#include "sparselab/cnf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sparselab {

CnfInstance::CnfInstance(int num_vars, std::vector<Clause> clauses, std::optional<long> target)
    : num_vars_(num_vars), clauses_(std::move(clauses)), target_(target) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        std::vector<int> vars;
        for (const auto& lit : clauses_[i]) {
            if (lit.var < 0 || lit.var >= num_vars)
                throw std::invalid_argument("clause " + std::to_string(i) + " uses unknown variable");
            vars.push_back(lit.var);
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw std::invalid_argument("clause " + std::to_string(i) + " mentions a variable twice");
    }
}

std::size_t CnfInstance::max_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses_) w = std::max(w, c.size());
    return w;
}

bool CnfInstance::satisfies(const Clause& clause, const Assignment& a) const {
    return std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return a[l.var] != l.negated; });
}

long CnfInstance::satisfied_count(const Assignment& a) const {
    if (a.size() != static_cast<std::size_t>(num_vars_))
        throw std::invalid_argument("assignment length does not match variable count");
    long n = 0;
    for (const auto& c : clauses_) n += satisfies(c, a) ? 1 : 0;
    return n;
}

}  // namespace sparselab
