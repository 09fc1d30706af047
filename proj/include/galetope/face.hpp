#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace galetope {

/// A face given by its vertex indices, kept strictly increasing.
/// Construction collapses duplicates, so clamped index formulas can feed
/// faces directly.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<int> vertices);
    Face(std::initializer_list<int> vertices);

    const std::vector<int>& vertices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int max_vertex() const; // -1 when empty

    bool contains(int vertex) const;
    bool subset_of(const Face& other) const;
    Face intersect(const Face& other) const;
    Face unite(const Face& other) const;
    Face with(int vertex) const;

    auto operator<=>(const Face&) const = default;

    std::vector<int>::const_iterator begin() const { return v_.begin(); }
    std::vector<int>::const_iterator end() const { return v_.end(); }

private:
    std::vector<int> v_;
};

/// Gale condition: any two indices outside `subset` are separated by an even
/// number of members of `subset`.
bool is_gale_subset(const Face& subset, int num_vertices);

/// True iff `subset` splits into disjoint pairs of consecutive integers.
bool is_paired_set(const Face& subset);

} // namespace galetope
