#include "maxcurve/point.hpp"

#include <algorithm>
#include <set>

#include "maxcurve/errors.hpp"

namespace maxcurve {

NodeSet::NodeSet(std::vector<Point> nodes) : nodes_(std::move(nodes))
{
    std::set<Point> seen;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!seen.insert(nodes_[i]).second) {
            throw PreconditionError("duplicate node (" + to_string(nodes_[i].x) + ", " +
                                    to_string(nodes_[i].y) + ") at index " + std::to_string(i));
        }
    }
}

bool NodeSet::contains(const Point& p) const
{
    return std::find(nodes_.begin(), nodes_.end(), p) != nodes_.end();
}

NodeSet NodeSet::with(const Point& p) const
{
    std::vector<Point> out = nodes_;
    out.push_back(p);
    return NodeSet(std::move(out));
}

NodeSet NodeSet::without(std::span<const std::size_t> indices) const
{
    std::vector<bool> drop(nodes_.size(), false);
    for (std::size_t i : indices) {
        if (i < drop.size()) {
            drop[i] = true;
        }
    }
    NodeSet out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!drop[i]) {
            out.nodes_.push_back(nodes_[i]);
        }
    }
    return out;
}

NodeSet NodeSet::subset(std::span<const std::size_t> indices) const
{
    std::vector<Point> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        out.push_back(nodes_.at(i));
    }
    return NodeSet(std::move(out));
}

}  // namespace maxcurve
