#include "sgx/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sgx {

namespace {

bool skippable(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

long long parse_int(const std::string& tok, std::size_t lineno) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected a non-negative integer, got '" +
                         tok + "'");
    return value;
}

}  // namespace

SignedGraph read_sg(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<SignedEdge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto tok = tokens(line);
        if (n < 0) {
            if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": header must be 'n m'");
            n = parse_int(tok[0], lineno);
            m = parse_int(tok[1], lineno);
            continue;
        }
        if (tok.size() != 3)
            throw ParseError("line " + std::to_string(lineno) + ": edge line must be 'u v s', got '" + line + "'");
        auto u = parse_int(tok[0], lineno), v = parse_int(tok[1], lineno);
        Sign s;
        if (tok[2] == "+") s = Sign::Positive;
        else if (tok[2] == "-") s = Sign::Negative;
        else throw ParseError("line " + std::to_string(lineno) + ": bad sign token '" + tok[2] + "'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), s});
    }
    if (n < 0) throw ParseError("missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were listed");
    try {
        return SignedGraph(static_cast<std::size_t>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

SignedGraph read_sg_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return read_sg(in);
}

SignedGraph parse_sg(const std::string& text) {
    std::istringstream in(text);
    return read_sg(in);
}

std::string write_sg(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? '+' : '-') << '\n';
    return out.str();
}

void write_sg_file(const SignedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << write_sg(g);
}

nlohmann::json to_json(const SignedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, to_int(e.sign)});
    return {{"n", g.order()}, {"edges", edges}};
}

SignedGraph graph_from_json(const nlohmann::json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        std::vector<SignedEdge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("edge entry must be [u, v, sign]: " + e.dump());
            int s = e[2].get<int>();
            if (s != 1 && s != -1) throw ParseError("edge sign must be 1 or -1: " + e.dump());
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), s > 0 ? Sign::Positive : Sign::Negative});
        }
        return SignedGraph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix JSON rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer()) throw ParseError("matrix entry is not an integer: " + j[i][k].dump());
            m(i, k) = j[i][k].get<long long>();
        }
    }
    return m;
}

}  // namespace sgx
