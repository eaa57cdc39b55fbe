#include "ttr/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ttr/families.hpp"

namespace ttr {

namespace {

std::string strip(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

int parse_int(const std::string& s, const char* what) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<Edge> parse_edge_list(const std::string& body) {
  std::vector<Edge> out;
  if (strip(body).empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge must look like u-v: '" + item + "'");
    out.push_back(make_edge(parse_int(strip(item.substr(0, dash)), "vertex"),
                            parse_int(strip(item.substr(dash + 1)), "vertex")));
  }
  return out;
}

}  // namespace

LabeledGraph graph_from_text(std::string_view text) {
  int n = -1;
  std::string deleted_body, edges_body;
  bool has_deleted = false, has_edges = false;
  std::stringstream ss{std::string(text)};
  std::string field;
  while (std::getline(ss, field, ';')) {
    field = strip(field);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value: '" + field + "'");
    std::string key = strip(field.substr(0, eq));
    std::string val = strip(field.substr(eq + 1));
    if (key == "n")
      n = parse_int(val, "n");
    else if (key == "deleted") {
      deleted_body = val;
      has_deleted = true;
    } else if (key == "edges") {
      edges_body = val;
      has_edges = true;
    } else
      throw std::invalid_argument("unknown graph field: '" + key + "'");
  }
  if (has_deleted == has_edges)
    throw std::invalid_argument("graph text needs exactly one of deleted= / edges=");
  if (has_deleted) {
    if (n < 0) throw std::invalid_argument("deleted= form requires n=");
    return LabeledGraph::from_complete_minus(n, parse_edge_list(deleted_body));
  }
  auto es = parse_edge_list(edges_body);
  if (n < 0) {
    int mx = 2;
    for (const auto& [u, v] : es) mx = std::max(mx, v);
    n = mx + 1;
  }
  return LabeledGraph(n, std::move(es));
}

std::string graph_to_text(const LabeledGraph& g) {
  auto del = g.deleted_edges();
  std::ostringstream os;
  os << "n=" << g.num_vertices() << "; ";
  const bool use_deleted = del.size() <= g.edges().size();
  os << (use_deleted ? "deleted=" : "edges=");
  const auto& list = use_deleted ? del : g.edges();
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) os << ",";
    os << list[i].first << "-" << list[i].second;
  }
  return os.str();
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs fields n and edges");
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u,v]");
    es.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
  }
  return LabeledGraph(j.at("n").get<int>(), std::move(es));
}

LabeledGraph graph_from_spec(std::string_view spec) {
  std::string s = strip(spec);
  if (s.empty()) throw std::invalid_argument("empty graph spec");
  if (s[0] == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw std::invalid_argument("cannot open graph file: " + s.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string body = strip(buf.str());
    if (!body.empty() && body[0] == '{') return graph_from_json(nlohmann::json::parse(body));
    return graph_from_text(body);
  }
  if (s[0] == '{') return graph_from_json(nlohmann::json::parse(s));
  if (s.find('=') != std::string::npos) return graph_from_text(s);
  // family shorthand NAME:n[:l]
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(strip(item));
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("graph spec not recognized: '" + s + "'");
  int n = parse_int(parts[1], "n");
  int l = parts.size() == 3 ? parse_int(parts[2], "l") : -1;
  return family_by_name(parts[0], n, l);
}

}  // namespace ttr
