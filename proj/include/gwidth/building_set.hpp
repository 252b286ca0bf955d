#ifndef GWIDTH_BUILDING_SET_HPP
#define GWIDTH_BUILDING_SET_HPP

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gwidth/errors.hpp"
#include "gwidth/graph.hpp"
#include "gwidth/subset.hpp"

namespace gwidth {

// A collection of subsets of [n+1]. Construction enforces only structure
// (members nonempty, inside the ground set, duplicate-free, canonically
// ordered); the building-set axioms are checked separately by validate() so
// that violations can be reported rather than thrown.
class BuildingSet {
public:
    BuildingSet(int ground_size, std::vector<Subset> members)
        : ground_size_(ground_size) {
        if (ground_size < 1 || ground_size > kMaxGroundSize)
            throw InputError("ground size must be in [1," +
                             std::to_string(kMaxGroundSize) + "]");
        Subset full = full_subset(ground_size);
        for (Subset m : members) {
            if (m == 0) throw InputError("building-set member must be nonempty");
            if (!is_subset_of(m, full))
                throw InputError("member " + subset_to_string(m) +
                                 " is not a subset of the ground set [" +
                                 std::to_string(ground_size) + "]");
        }
        std::sort(members.begin(), members.end(), canonical_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
        lookup_.insert(members_.begin(), members_.end());
    }

    static BuildingSet from_graph(const Graph& g, const EnumLimits& limits = {}) {
        return BuildingSet(g.vertex_count(), enumerate_connected_subsets(g, limits));
    }

    int ground_size() const { return ground_size_; }
    Subset full_set() const { return full_subset(ground_size_); }
    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Subset s) const { return lookup_.count(s) != 0; }
    bool has_full_ground() const { return contains(full_set()); }

    struct Violations {
        std::vector<int> missing_singletons;
        std::vector<std::pair<Subset, Subset>> open_unions; // intersecting pair, union absent
        bool ok() const { return missing_singletons.empty() && open_unions.empty(); }
    };

    // Both axioms: all singletons present; intersecting members have their
    // union present. Pairwise scan, fine at desk scale.
    Violations validate() const {
        Violations v;
        for (int i = 1; i <= ground_size_; ++i)
            if (!contains(singleton(i))) v.missing_singletons.push_back(i);
        for (std::size_t a = 0; a < members_.size(); ++a) {
            for (std::size_t b = a + 1; b < members_.size(); ++b) {
                Subset x = members_[a], y = members_[b];
                if ((x & y) != 0 && !contains(x | y)) v.open_unions.emplace_back(x, y);
            }
        }
        return v;
    }

    std::size_t restriction_size(Subset window) const {
        std::size_t count = 0;
        for (Subset m : members_)
            if (is_subset_of(m, window)) ++count;
        return count;
    }

    // Sizes of the restriction to every member, aligned with members().
    std::vector<std::size_t> restriction_sizes() const {
        std::vector<std::size_t> out(members_.size(), 0);
        for (std::size_t i = 0; i < members_.size(); ++i)
            out[i] = restriction_size(members_[i]);
        return out;
    }

    // Number of members containing each vertex; equals the k-vector when the
    // set came from a graph.
    std::vector<long long> member_counts_per_vertex() const {
        std::vector<long long> out(static_cast<std::size_t>(ground_size_), 0);
        for (Subset m : members_) {
            Subset s = m;
            while (s != 0) {
                ++out[static_cast<std::size_t>(min_element(s) - 1)];
                s &= s - 1;
            }
        }
        return out;
    }

private:
    int ground_size_;
    std::vector<Subset> members_;
    std::unordered_set<Subset> lookup_;
};

struct RestrictedBuildingSet {
    Subset window;
    std::vector<Subset> members; // exactly the base members inside window
};

inline RestrictedBuildingSet restrict(const BuildingSet& b, Subset window) {
    if (!is_subset_of(window, b.full_set()))
        throw InputError("restriction window " + subset_to_string(window) +
                         " is not a subset of the ground set");
    RestrictedBuildingSet out;
    out.window = window;
    for (Subset m : b.members())
        if (is_subset_of(m, window)) out.members.push_back(m);
    return out;
}

inline bool has_full_ground(const BuildingSet& b) { return b.has_full_ground(); }

// Relabels the ground set; old_of_new[j-1] is the original label carried by
// new label j.
inline BuildingSet relabeled(const BuildingSet& b, const std::vector<int>& old_of_new) {
    std::vector<int> new_of_old(static_cast<std::size_t>(b.ground_size()) + 1, 0);
    for (int j = 1; j <= b.ground_size(); ++j)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(j - 1)])] = j;
    std::vector<Subset> members;
    members.reserve(b.size());
    for (Subset m : b.members()) {
        Subset mapped = 0;
        for (int v : elements(m))
            mapped |= singleton(new_of_old[static_cast<std::size_t>(v)]);
        members.push_back(mapped);
    }
    return BuildingSet(b.ground_size(), std::move(members));
}

} // namespace gwidth

#endif // GWIDTH_BUILDING_SET_HPP
