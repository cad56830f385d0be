#include "odiam/io.hpp"

#include "odiam/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace odiam {

ordered_json orientation_to_json(const Orientation &d) {
    ordered_json j;
    j["parts"] = d.topology().parts();
    ordered_json arcs = ordered_json::array();
    for (const Arc &a : d.arcs())
        arcs.push_back({a.from, a.to});
    j["arcs"] = std::move(arcs);
    return j;
}

std::string orientation_json_text(const Orientation &d) { return orientation_to_json(d).dump() + "\n"; }

namespace {

std::string position_text(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

int as_int(const ordered_json &value, const char *what) {
    if (!value.is_number_integer())
        throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
    return value.get<int>();
}

} // namespace

Orientation orientation_from_json_text(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        // byte is one past the offending character
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw Error(ErrorKind::ParseError, position_text(text, at) + ": malformed JSON");
    }
    if (!j.is_object() || !j.contains("parts") || !j.contains("arcs"))
        throw Error(ErrorKind::ParseError, "expected an object with \"parts\" and \"arcs\"");
    if (!j["parts"].is_array() || !j["arcs"].is_array())
        throw Error(ErrorKind::ParseError, "\"parts\" and \"arcs\" must be arrays");
    std::vector<int> parts;
    for (const auto &p : j["parts"])
        parts.push_back(as_int(p, "part size"));
    std::vector<Arc> arcs;
    for (const auto &a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2)
            throw Error(ErrorKind::ParseError, "each arc must be a [from, to] pair");
        arcs.push_back({as_int(a[0], "arc endpoint"), as_int(a[1], "arc endpoint")});
    }
    return orient(make_complete_multipartite(parts), arcs);
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    out << text;
    out.close();
    if (!out)
        throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

Orientation read_orientation_file(const std::filesystem::path &path) {
    return orientation_from_json_text(read_text_file(path));
}

std::string orientation_to_dot(const Orientation &d) {
    const Topology &t = d.topology();
    std::ostringstream out;
    out << "digraph orientation {\n";
    for (int p = 0; p < t.n_parts(); ++p) {
        out << "  subgraph cluster_" << p << " {\n";
        out << "    label=\"V" << p + 1 << "\";\n";
        out << "    rank=same;\n";
        for (int v = t.part_begin(p); v < t.part_begin(p) + t.part_size(p); ++v)
            out << "    " << v << " [label=\"" << vertex_name(t, v) << "\"];\n";
        out << "  }\n";
    }
    for (const Arc &a : d.arcs())
        out << "  " << a.from << " -> " << a.to << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view token = text.substr(start, end - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw Error(ErrorKind::ParseError, "bad part list \"" + std::string(text) + "\"");
        parts.push_back(value);
        start = end + 1;
    }
    if (parts.empty())
        throw Error(ErrorKind::EmptyParts, "no parts given");
    return parts;
}

} // namespace odiam
