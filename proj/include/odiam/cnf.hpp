#pragma once

#include "odiam/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace odiam {

// DIMACS CNF for "some orientation of the topology has diameter <= 2".
//
// Variables, in numbering order:
//   1..E      one per edge {u,v}, u < v, lexicographic; true means u -> v.
//   E+1..     a(u,w,v) for every ordered pair (u,v) and every common neighbour w,
//             grouped by ordered pair (lexicographic), w ascending.
//   then      prefix-equality variables of the row-ordering constraints.
//
// Clauses:
//   per ordered pair (u,v): [u->v if adjacent] or a(u,w1,v) or a(u,w2,v) ...
//   per a(u,w,v): a -> u->w, a -> w->v, (u->w and w->v) -> a
//   symmetry breaking (optional): for consecutive vertices a, b of a part other than
//   the first, the row of a over all earlier parts is lexicographically <= that of b.
struct Cnf {
    int variables = 0;
    int edge_variables = 0;
    int path_variables = 0;
    int order_variables = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf encode_diameter2(const Topology &topology, bool symmetry_breaking = true);

// Signed literal for the arc u -> v.
int arc_literal(const Topology &topology, int u, int v);

void write_dimacs(std::ostream &out, const Cnf &cnf);
Cnf read_dimacs(std::istream &in);

struct CnfStats {
    int variables = 0;
    std::size_t clauses = 0;
    int edge_variables = 0;
};

CnfStats export_cnf(std::span<const int> parts, const std::filesystem::path &out,
                    bool symmetry_breaking = true);

// model[i] is the value of variable i + 1; only edge variables are read.
Orientation decode_model(const Topology &topology, const std::vector<bool> &model);

bool satisfies(const Cnf &cnf, const std::vector<bool> &model);

} // namespace odiam
