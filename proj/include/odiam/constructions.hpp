#pragma once

#include "odiam/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace odiam {

enum class ConstructionFamily { K33q, K34q, MiddleLayerBipartite, CompleteGraph };

std::string_view to_string(ConstructionFamily f);

struct Construction {
    ConstructionFamily family;
    int q = 0;
    Orientation orientation;
    int promised_diameter = 2;
    // Choices made where the recipe leaves arc directions open.
    std::vector<std::string> completion_log;
};

// K(3,3,q), 3 <= q <= 6, diameter 2.
//   q = 6: V3 = {z+++} u {z+--, z+--} u {z-+-, z-+-} u {z---}, in that vertex order.
//   q = 5: q = 6 without the --- vertex.
//   q = 4: one vertex in each of +++, ++-, +-+, +--.
//   q = 3: fixed arc table produced by decide_diameter2.
Construction construct_33q(int q);

// K(3,4,q), 4 <= q <= 11, diameter 2. q = 10 is the fully explicit base;
// q in [4, 9] deletes vertices from it, q = 11 uses the middle-layer block.
Construction construct_34q(int q);

// Vertex order of the q = 10 base of construct_34q, relative to the first z vertex.
struct K34Base {
    static constexpr int z_plus = 0;
    static constexpr int z(int k) { return k; } // k in 1..8
    static constexpr int z_minus = 9;
};

// Vertices of the q = 10 base kept by the deletion recipe for q.
VertexSet k34_deletion_keep(int q);

// K(p,q) with p on the small side (part 0). The k-th big-side vertex points at
// the k-th floor(p/2)-subset of the small side in lexicographic order and
// receives arcs from the rest.
Construction middle_layer_bipartite(int p, int q);

// Tournament on n >= 3 vertices with diameter f(K_n).
Construction complete_graph_orientation(int n);

// Orientation of the ambiguous edges in fixed+ambiguous that reaches the target
// diameter. Preferred directions first, then every flip pattern in increasing
// order; the chosen pattern is appended to log when it is not the preferred one.
Orientation complete_ambiguous(const Topology &topology, const std::vector<Arc> &fixed,
                               const std::vector<Arc> &preferred, int target_diameter,
                               std::vector<std::string> &log, std::string_view what);

} // namespace odiam
