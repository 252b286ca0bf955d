#ifndef GWIDTH_FAMILIES_HPP
#define GWIDTH_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gwidth/errors.hpp"
#include "gwidth/graph.hpp"

namespace gwidth {

enum class FamilyKind { Complete, Path, Cycle, Star };

inline std::optional<FamilyKind> family_from_name(std::string_view name) {
    if (name == "complete") return FamilyKind::Complete;
    if (name == "path") return FamilyKind::Path;
    if (name == "cycle") return FamilyKind::Cycle;
    if (name == "star") return FamilyKind::Star;
    return std::nullopt;
}

inline std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Complete: return "complete";
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        default: return "star";
    }
}

// Canonical labelings: path/cycle in label order, star centered at 1.
inline Graph make_family(FamilyKind kind, int size) {
    if (size < 1) throw InputError("family size must be positive");
    if (kind == FamilyKind::Cycle && size < 3)
        throw InputError("cycle needs at least three vertices");
    Graph g(size);
    switch (kind) {
        case FamilyKind::Complete:
            for (int u = 1; u <= size; ++u)
                for (int v = u + 1; v <= size; ++v) g.add_edge(u, v);
            break;
        case FamilyKind::Path:
            for (int u = 1; u < size; ++u) g.add_edge(u, u + 1);
            break;
        case FamilyKind::Cycle:
            for (int u = 1; u < size; ++u) g.add_edge(u, u + 1);
            g.add_edge(size, 1);
            break;
        case FamilyKind::Star:
            for (int v = 2; v <= size; ++v) g.add_edge(1, v);
            break;
    }
    return g;
}

} // namespace gwidth

#endif // GWIDTH_FAMILIES_HPP
