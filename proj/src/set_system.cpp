#include "sparselab/set_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sparselab {

SetSystem::SetSystem(int ground, std::vector<std::vector<int>> sets) : ground_(ground), sets_(std::move(sets)) {
    if (ground < 0) throw std::invalid_argument("negative ground set size");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        auto& s = sets_[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("set " + std::to_string(i) + " repeats an element");
        if (!s.empty() && (s.front() < 0 || s.back() >= ground))
            throw std::invalid_argument("set " + std::to_string(i) + " has an element outside the ground set");
    }
}

int SetSystem::frequency() const {
    std::vector<int> count(ground_, 0);
    for (const auto& s : sets_)
        for (int e : s) ++count[e];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

int SetSystem::max_set_size() const {
    std::size_t best = 0;
    for (const auto& s : sets_) best = std::max(best, s.size());
    return static_cast<int>(best);
}

SetSystem SetSystem::dual() const {
    std::vector<std::vector<int>> sets(ground_);
    for (std::size_t i = 0; i < sets_.size(); ++i)
        for (int e : sets_[i]) sets[e].push_back(static_cast<int>(i));
    return SetSystem(static_cast<int>(sets_.size()), std::move(sets));
}

}  // namespace sparselab
