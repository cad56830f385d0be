#include "odiam/cnf.hpp"

#include "odiam/error.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace odiam {

namespace {

// Edge variable index of {u,v}, u < v: edges are numbered row by row.
class EdgeNumbering {
public:
    explicit EdgeNumbering(const Topology &t) : n_(t.n_vertices()), index_(n_ * n_, 0) {
        int next = 1;
        for (const Edge &e : t.edges())
            index_[e.u * n_ + e.v] = next++;
    }
    int operator()(int u, int v) const { return u < v ? index_[u * n_ + v] : -index_[v * n_ + u]; }

private:
    int n_;
    std::vector<int> index_;
};

} // namespace

int arc_literal(const Topology &topology, int u, int v) {
    if (!topology.adjacent(u, v))
        throw std::invalid_argument("no edge between the given vertices");
    return EdgeNumbering(topology)(u, v);
}

Cnf encode_diameter2(const Topology &t, bool symmetry_breaking) {
    const int n = t.n_vertices();
    const EdgeNumbering lit(t);
    Cnf cnf;
    cnf.edge_variables = static_cast<int>(t.edge_count());
    int next = cnf.edge_variables + 1;

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            std::vector<int> reach;
            if (t.adjacent(u, v))
                reach.push_back(lit(u, v));
            const VertexSet common = t.neighbors(u) & t.neighbors(v) & ~vertex_bit(u) & ~vertex_bit(v);
            for (int w : members(common)) {
                const int a = next++;
                ++cnf.path_variables;
                reach.push_back(a);
                cnf.clauses.push_back({-a, lit(u, w)});
                cnf.clauses.push_back({-a, lit(w, v)});
                cnf.clauses.push_back({-lit(u, w), -lit(w, v), a});
            }
            cnf.clauses.push_back(std::move(reach));
        }
    }

    if (symmetry_breaking) {
        for (int p = 1; p < t.n_parts(); ++p) {
            const int columns = t.part_begin(p);
            for (int k = 0; k + 1 < t.part_size(p); ++k) {
                const int a = t.part_begin(p) + k;
                const int b = a + 1;
                int equal_prefix = 0; // 0: empty prefix, always equal
                for (int c = 0; c < columns; ++c) {
                    const int la = lit(a, c), lb = lit(b, c);
                    std::vector<int> le = {-la, lb};
                    if (equal_prefix != 0)
                        le.insert(le.begin(), -equal_prefix);
                    cnf.clauses.push_back(std::move(le));
                    if (c + 1 == columns)
                        break;
                    const int e = next++;
                    ++cnf.order_variables;
                    std::vector<int> both_zero = {la, lb, e};
                    std::vector<int> both_one = {-la, -lb, e};
                    if (equal_prefix != 0) {
                        both_zero.insert(both_zero.begin(), -equal_prefix);
                        both_one.insert(both_one.begin(), -equal_prefix);
                    }
                    cnf.clauses.push_back(std::move(both_zero));
                    cnf.clauses.push_back(std::move(both_one));
                    equal_prefix = e;
                }
            }
        }
    }
    cnf.variables = next - 1;
    return cnf;
}

void write_dimacs(std::ostream &out, const Cnf &cnf) {
    out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
    for (const auto &clause : cnf.clauses) {
        for (int l : clause)
            out << l << ' ';
        out << "0\n";
    }
}

Cnf read_dimacs(std::istream &in) {
    Cnf cnf;
    std::string line;
    std::size_t declared = 0;
    bool header = false;
    std::vector<int> current;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> cnf.variables >> declared) || fmt != "cnf")
                throw Error(ErrorKind::ParseError, "bad DIMACS header at line " + std::to_string(line_no));
            header = true;
            continue;
        }
        if (!header)
            throw Error(ErrorKind::ParseError, "clause before header at line " + std::to_string(line_no));
        int l = 0;
        while (ls >> l) {
            if (l == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::abs(l) > cnf.variables)
                    throw Error(ErrorKind::ParseError, "literal out of range at line " + std::to_string(line_no));
                current.push_back(l);
            }
        }
        if (!ls.eof())
            throw Error(ErrorKind::ParseError, "non-integer token at line " + std::to_string(line_no));
    }
    if (!header)
        throw Error(ErrorKind::ParseError, "missing DIMACS header");
    if (!current.empty() || cnf.clauses.size() != declared)
        throw Error(ErrorKind::ParseError, "clause count does not match the header");
    return cnf;
}

CnfStats export_cnf(std::span<const int> parts, const std::filesystem::path &out,
                    bool symmetry_breaking) {
    const Topology t = make_complete_multipartite(parts);
    const Cnf cnf = encode_diameter2(t, symmetry_breaking);
    std::ofstream file(out);
    if (!file)
        throw Error(ErrorKind::IoError, "cannot open " + out.string() + " for writing");
    write_dimacs(file, cnf);
    file.close();
    if (!file)
        throw Error(ErrorKind::IoError, "failed writing " + out.string());
    return {cnf.variables, cnf.clauses.size(), cnf.edge_variables};
}

Orientation decode_model(const Topology &topology, const std::vector<bool> &model) {
    const auto edges = topology.edges();
    if (model.size() < edges.size())
        throw std::invalid_argument("model shorter than the edge variable block");
    std::vector<VertexSet> out(topology.n_vertices(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge &e = edges[i];
        if (model[i])
            out[e.u] |= vertex_bit(e.v);
        else
            out[e.v] |= vertex_bit(e.u);
    }
    return Orientation::from_out_sets(topology, std::move(out));
}

bool satisfies(const Cnf &cnf, const std::vector<bool> &model) {
    for (const auto &clause : cnf.clauses) {
        bool ok = false;
        for (int l : clause) {
            const bool value = model[std::abs(l) - 1];
            if ((l > 0) == value) {
                ok = true;
                break;
            }
        }
        if (!ok)
            return false;
    }
    return true;
}

} // namespace odiam
