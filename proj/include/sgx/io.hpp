#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include <json.hpp>

#include "sgx/signed_graph.hpp"

namespace sgx {

/// Malformed .sg / JSON input. The message names the offending token and line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ".sg" text format:
//   n m
//   u v s        (m lines, s in {+,-})
// Blank lines and lines whose first non-blank character is '#' are ignored.
SignedGraph read_sg(std::istream& in);
SignedGraph read_sg_file(const std::filesystem::path& path);
SignedGraph parse_sg(const std::string& text);
std::string write_sg(const SignedGraph& g);
void write_sg_file(const SignedGraph& g, const std::filesystem::path& path);

// JSON mirror: {"n": 3, "edges": [[0, 1, -1], [1, 2, 1]]}
nlohmann::json to_json(const SignedGraph& g);
SignedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

}  // namespace sgx
