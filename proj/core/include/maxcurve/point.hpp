#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "maxcurve/rational.hpp"

namespace maxcurve {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    // Lexicographic; only used for ordered containers.
    friend bool operator<(const Point& a, const Point& b)
    {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

/// Ordered sequence of pairwise distinct nodes.
class NodeSet {
public:
    NodeSet() = default;
    /// PreconditionError("duplicate node ...") when two points coincide.
    explicit NodeSet(std::vector<Point> nodes);
    NodeSet(std::initializer_list<Point> nodes) : NodeSet(std::vector<Point>(nodes)) {}

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const Point& operator[](std::size_t i) const { return nodes_[i]; }
    std::span<const Point> nodes() const { return nodes_; }
    auto begin() const { return nodes_.begin(); }
    auto end() const { return nodes_.end(); }

    bool contains(const Point& p) const;

    /// Copy with `p` appended; PreconditionError if already present.
    NodeSet with(const Point& p) const;
    /// Nodes whose indices are not listed, order preserved.
    NodeSet without(std::span<const std::size_t> indices) const;
    /// Nodes at the listed indices, in the listed order.
    NodeSet subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<Point> nodes_;
};

}  // namespace maxcurve
