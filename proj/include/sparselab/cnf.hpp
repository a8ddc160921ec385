#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace sparselab {

/// Literal over variable `var` (0-based); `negated` selects the complement.
struct Literal {
    int var = 0;
    bool negated = false;

    /// DIMACS form: 1-based, negative when negated.
    int dimacs() const { return negated ? -(var + 1) : var + 1; }
    static Literal from_dimacs(int code) { return {code < 0 ? -code - 1 : code - 1, code < 0}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;
using Assignment = std::vector<bool>;

class CnfInstance {
public:
    CnfInstance() = default;
    /// Throws std::invalid_argument if a literal is out of range or a clause
    /// mentions a variable twice.
    CnfInstance(int num_vars, std::vector<Clause> clauses, std::optional<long> target = std::nullopt);

    int num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t max_width() const;
    /// Number of clauses the decision version asks to satisfy, if any.
    std::optional<long> target() const { return target_; }

    bool satisfies(const Clause& clause, const Assignment& a) const;
    long satisfied_count(const Assignment& a) const;

    friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

private:
    int num_vars_ = 0;
    std::vector<Clause> clauses_;
    std::optional<long> target_;
};

}  // namespace sparselab
