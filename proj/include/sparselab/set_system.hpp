#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sparselab {

/// A system of subsets over the ground set {0, ..., ground-1}.
class SetSystem {
public:
    SetSystem() = default;
    /// Sets are sorted on construction; throws std::invalid_argument on an
    /// element outside the ground set or a repeated element within one set.
    SetSystem(int ground, std::vector<std::vector<int>> sets);

    int ground() const { return ground_; }
    std::size_t count() const { return sets_.size(); }
    std::span<const int> set(std::size_t i) const { return sets_[i]; }
    const std::vector<std::vector<int>>& sets() const { return sets_; }

    /// Maximum number of sets any element belongs to.
    int frequency() const;
    int max_set_size() const;

    /// Roles of sets and elements exchanged: element j of the dual is set j
    /// here, set i of the dual lists the sets containing element i.
    SetSystem dual() const;

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    int ground_ = 0;
    std::vector<std::vector<int>> sets_;
};

}  // namespace sparselab
