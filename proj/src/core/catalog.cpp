#include "catalog.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace cubicfolds::catalog {

namespace {

std::vector<std::string> data_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw DataError("bad integer '" + s + "' in table data");
        return v;
    } catch (const std::exception&) {
        throw DataError("bad integer '" + s + "' in table data");
    }
}

}  // namespace

const SimpleGraph& gamma() {
    static const SimpleGraph g = [] {
        SimpleGraph g(15);
        // (degree-3 endpoint, subdivision vertex) incidences, labels 1..15.
        constexpr int subdivision[9][3] = {
            {7, 1, 2}, {8, 1, 4}, {9, 1, 6},  {10, 2, 3}, {11, 3, 4},
            {12, 3, 6}, {13, 2, 5}, {14, 4, 5}, {15, 5, 6},
        };
        for (auto [mid, a, b] : subdivision) {
            g.add_edge(a - 1, mid - 1);
            g.add_edge(mid - 1, b - 1);
        }
        for (int v = 0; v < 15; ++v) g.set_label(v, std::to_string(v + 1));
        return g;
    }();
    return g;
}

const SimpleGraph& delta() {
    static const SimpleGraph g = [] {
        std::vector<int> keep;
        for (int v = 0; v < 15; ++v)
            if (v != 0 && v != 2) keep.push_back(v);  // drop labels 1 and 3
        return gamma().induced(keep);
    }();
    return g;
}

const SimpleGraph& e6_tilde() {
    static const SimpleGraph g = [] {
        SimpleGraph g(7);
        // Vertex 0 is the center; arms (1,2), (3,4), (5,6).
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        g.add_edge(0, 5);
        g.add_edge(5, 6);
        return g;
    }();
    return g;
}

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = [] {
        std::vector<GoldenRow> rows;
        for (const auto& line : data_lines(golden_204_text())) {
            auto cells = split(line, ';');
            if (cells.size() != 4) throw DataError("golden row needs 4 fields: '" + line + "'");
            GoldenRow row{parse_int(cells[0]), parse_int(cells[1]), parse_int(cells[2]),
                          Configuration::parse(cells[3]), 'A'};
            if (row.index < 1 || row.index > 204)
                throw DataError("golden row index out of range: " + line);
            row.table = row.index <= 18 ? 'A' : row.index <= 95 ? 'B' : 'C';
            rows.push_back(std::move(row));
        }
        if (rows.size() != 204) throw DataError("expected 204 golden rows");
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].index != static_cast<int>(i) + 1)
                throw DataError("golden row indices must be dense 1..204");
        return rows;
    }();
    return rows;
}

const GoldenRow& golden_row(int index) {
    const auto& rows = golden_rows();
    if (index < 1 || index > 204) throw DomainError("golden row index must be 1..204");
    return rows[static_cast<size_t>(index) - 1];
}

const std::vector<Configuration>& maximal_ade() {
    static const std::vector<Configuration> list = [] {
        // Theorem: the maximal simple configurations.
        std::vector<Configuration> list;
        for (const char* s : {"E8+A2", "E7+A2+A1", "E6+2A2", "D8+A3", "D6+A3+2A1",
                              "D5+2A3", "3D4", "A11", "A7+A4", "2A5+A1", "5A2", "10A1"})
            list.push_back(Configuration::parse(s));
        return list;
    }();
    return list;
}

const std::vector<Configuration>& maximal_an() {
    static const std::vector<Configuration> list = [] {
        std::vector<Configuration> list;
        for (const char* s : {"A11", "A7+A4", "2A5+A1", "3A3+A1", "2A3+A2+2A1",
                              "2A3+4A1", "5A2", "10A1"})
            list.push_back(Configuration::parse(s));
        return list;
    }();
    return list;
}

const std::vector<Table5Row>& table5() {
    static const std::vector<Table5Row> rows = [] {
        std::vector<Table5Row> rows;
        for (const auto& line : data_lines(table5_text())) {
            auto cells = split(line, ';');
            if (cells.size() != 2) throw DataError("table5 row needs 2 fields: '" + line + "'");
            Table5Row row{Configuration::parse(cells[0]), {}};
            for (const auto& v : split(cells[1], ',')) {
                int label = parse_int(v);
                if (label < 1 || label > 15) throw DataError("table5 vertex out of 1..15: " + line);
                row.remove.push_back(label);
            }
            rows.push_back(std::move(row));
        }
        if (rows.size() != 10) throw DataError("expected 10 table5 rows");
        return rows;
    }();
    return rows;
}

const std::vector<AdjacencyEdge>& unimodal_adjacency() {
    static const std::vector<AdjacencyEdge> edges = [] {
        std::vector<AdjacencyEdge> edges;
        for (const auto& line : data_lines(table8_edges_text())) {
            std::istringstream ls(line);
            std::string from, to;
            if (!(ls >> from >> to)) throw DataError("bad adjacency line: '" + line + "'");
            AdjacencyEdge e{SingularityType::parse(from), SingularityType::parse(to)};
            if (e.from == e.to) throw DataError("self adjacency: '" + line + "'");
            edges.push_back(std::move(e));
        }
        return edges;
    }();
    return edges;
}

const std::vector<DpwRow>& dpw_tables() {
    static const std::vector<DpwRow> rows = [] {
        std::vector<DpwRow> rows;
        for (std::string_view text : {dpw_semisimple_text(), dpw_unipotent_text()}) {
            for (const auto& line : data_lines(text)) {
                auto cells = split(line, ';');
                if (cells.size() != 3) throw DataError("dpw row needs 3 fields: '" + line + "'");
                rows.push_back(DpwRow{cells[0], Configuration::parse(cells[1]), parse_int(cells[2])});
            }
        }
        return rows;
    }();
    return rows;
}

const std::vector<Corank3Row>& corank3_table() {
    static const std::vector<Corank3Row> rows = {
        {12, SingularityType::U12(), "three concurrent lines", "D4"},
        {11, SingularityType::S11(), "conic and tangent", "A3"},
        {11, SingularityType::T(4, 4, 4), "triangle", "3A1"},
        {10, SingularityType::Q10(), "cuspidal cubic", "A2"},
        {10, SingularityType::T(3, 4, 4), "conic and secant", "2A1"},
        {9, SingularityType::T(3, 3, 4), "nodal cubic", "A1"},
        {8, SingularityType::T(3, 3, 3), "smooth cubic", "-"},
    };
    return rows;
}

// The source table is headed by the third jet of the local equation even
// though its caption says first jet; the rows are stored under the third-jet
// reading.
const std::vector<Corank2Row>& corank2_table() {
    static const std::vector<Corank2Row> rows = {
        {10, SingularityType::T(2, 3, 6), "-", "D4"},
        {8, SingularityType::E(8), "-", "A2"},
        {7, SingularityType::E(7), "A1 or none", "A1"},
        {6, SingularityType::E(6), "A2, A1 or none", "-"},
        {8, SingularityType::D(8), "-", "A3"},
        {7, SingularityType::D(7), "-", "A2"},
        {6, SingularityType::D(6), "2A1, A1 or none", "A1"},
        {5, SingularityType::D(5), "A3, A2, 2A1, A1 or none", "-"},
        {4, SingularityType::D(4), "D4, A3, A2, 3A1, 2A1, A1 or none", "-"},
    };
    return rows;
}

const std::vector<SurfaceProjectionRow>& cubic_surface_table() {
    static const std::vector<SurfaceProjectionRow> rows = {
        {SingularityType::E(6), "a line", "A2"},
        {SingularityType::D(5), "a line", "A1"},
        {SingularityType::D(4), "a line", "-"},
        {SingularityType::A(5), "a point", "A3"},
        {SingularityType::A(4), "a point", "A2"},
        {SingularityType::A(3), "a point", "A1"},
        {SingularityType::A(2), "a point", "-"},
        {SingularityType::A(1), "-", "-"},
    };
    return rows;
}

}  // namespace cubicfolds::catalog
