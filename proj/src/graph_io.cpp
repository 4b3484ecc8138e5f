#include "sgt/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sgt {

namespace {

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

int parse_sign(int line, const std::string& token) {
  if (token == "+" || token == "+1" || token == "1") return +1;
  if (token == "-" || token == "-1") return -1;
  fail_at(line, "bad sign '" + token + "' (use + or -)");
}

int parse_vertex(int line, const std::string& token, int vertex_count) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail_at(line, "bad vertex '" + token + "'");
  }
  if (used != token.size()) fail_at(line, "bad vertex '" + token + "'");
  if (value < 0 || value >= vertex_count)
    fail_at(line, "vertex " + token + " outside 0.." + std::to_string(vertex_count - 1));
  return value;
}

std::vector<std::string> tokens_of(const std::string& statement) {
  std::istringstream in(statement);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SignedGraph parse_signed_graph_text(const std::string& text) {
  SignedGraph g;
  bool saw_vertex_count = false;
  int line_no = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    // ';' separates statements within a line.
    std::istringstream statements(line);
    std::string statement;
    while (std::getline(statements, statement, ';')) {
      const auto toks = tokens_of(statement);
      if (toks.empty()) continue;
      if (toks[0] == "v") {
        if (saw_vertex_count) fail_at(line_no, "duplicate vertex count");
        if (toks.size() != 2) fail_at(line_no, "expected 'v <count>'");
        std::size_t used = 0;
        int count = 0;
        try {
          count = std::stoi(toks[1], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != toks[1].size() || count < 0)
          fail_at(line_no, "bad vertex count '" + toks[1] + "'");
        g.vertex_count = count;
        saw_vertex_count = true;
      } else if (toks[0] == "e") {
        if (!saw_vertex_count) fail_at(line_no, "edge before the 'v <count>' line");
        if (toks.size() != 4) fail_at(line_no, "expected 'e <u> <v> <+|->'");
        Edge e;
        e.u = parse_vertex(line_no, toks[1], g.vertex_count);
        e.v = parse_vertex(line_no, toks[2], g.vertex_count);
        e.sign = parse_sign(line_no, toks[3]);
        g.edges.push_back(e);
      } else {
        fail_at(line_no, "unknown directive '" + toks[0] + "'");
      }
    }
  }
  if (!saw_vertex_count) throw std::invalid_argument("graph text needs a 'v <count>' line");
  return g;
}

std::string signed_graph_to_text(const SignedGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count << "\n";
  for (const Edge& e : g.edges)
    out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
  return out.str();
}

SignedGraph parse_signed_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer 'vertices' field");
  SignedGraph g;
  g.vertex_count = doc["vertices"].get<int>();
  if (g.vertex_count < 0) throw std::invalid_argument("graph JSON: negative vertex count");
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw std::invalid_argument("graph JSON: 'edges' must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.is_object() || !item.contains("u") || !item.contains("v") ||
          !item.contains("sign") || !item["u"].is_number_integer() ||
          !item["v"].is_number_integer() || !item["sign"].is_number_integer())
        throw std::invalid_argument(
            "graph JSON: each edge needs integer 'u', 'v' and 'sign' fields");
      Edge e;
      e.u = item["u"].get<int>();
      e.v = item["v"].get<int>();
      e.sign = item["sign"].get<int>();
      if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count)
        throw std::invalid_argument("graph JSON: edge endpoint outside 0.." +
                                    std::to_string(g.vertex_count - 1));
      if (e.sign != 1 && e.sign != -1)
        throw std::invalid_argument("graph JSON: edge sign must be 1 or -1");
      g.edges.push_back(e);
    }
  }
  return g;
}

std::string signed_graph_to_json(const SignedGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_count;
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges)
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}});
  return doc.dump(2) + "\n";
}

SignedGraph load_signed_graph(const std::string& path) {
  std::string content;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    content = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    content = buffer.str();
  }
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{')
    return parse_signed_graph_json(content);
  return parse_signed_graph_text(content);
}

void save_signed_graph(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write graph file '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  out << (json ? signed_graph_to_json(g) : signed_graph_to_text(g));
  if (!out) throw std::runtime_error("failed writing graph file '" + path + "'");
}

}  // namespace sgt
