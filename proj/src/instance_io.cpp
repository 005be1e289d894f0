#include "ecg/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ecg::io {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

long long to_integer(const std::string& token, std::size_t line, const char* what) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + token + "'");
  }
  return value;
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

PCWalk build_tour(const ColoredMultigraph& g, const std::vector<long long>& items,
                  std::size_t line) {
  if (items.size() < 3 || items.size() % 2 == 0) {
    throw ParseError(line, "tour must alternate vertex, edge, ..., vertex");
  }
  PCWalk w;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const long long id = items[i];
    if (i % 2 == 0) {
      if (id < 1 || id > static_cast<long long>(g.num_vertices())) {
        throw ParseError(line, "tour vertex " + std::to_string(id) + " out of range");
      }
      w.vertices.push_back(static_cast<VertexId>(id - 1));
    } else {
      if (id < 1 || id > static_cast<long long>(g.num_edges())) {
        throw ParseError(line, "tour edge " + std::to_string(id) + " out of range");
      }
      const auto e = static_cast<EdgeId>(id - 1);
      w.edges.push_back(e);
      w.weight += g.edge(e).weight;
    }
  }
  w.first_color = g.edge(w.edges.front()).color;
  w.last_color = g.edge(w.edges.back()).color;
  return w;
}

}  // namespace

ColoredMultigraph parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) return true;
    }
    return false;
  };

  if (!next()) throw ParseError(line_no, "missing header 'ecg <n> <k> <m>'");
  auto head = tokens(line);
  if (head.size() != 4 || head[0] != "ecg") {
    throw ParseError(line_no, "header must be 'ecg <n> <k> <m>'");
  }
  const long long n = to_integer(head[1], line_no, "vertex count");
  const long long k = to_integer(head[2], line_no, "color count");
  const long long m = to_integer(head[3], line_no, "edge count");
  if (n < 2) throw ParseError(line_no, "need at least 2 vertices");
  if (k < 1) throw ParseError(line_no, "need at least 1 color");
  if (m < 1) throw ParseError(line_no, "need at least 1 edge");
  if (n > (1LL << 31) || k > (1LL << 31)) throw ParseError(line_no, "header value too large");

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next()) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                    std::to_string(i));
    }
    auto t = tokens(line);
    if (t.size() != 4) throw ParseError(line_no, "edge line must be '<u> <v> <color> <weight>'");
    const long long u = to_integer(t[0], line_no, "vertex");
    const long long v = to_integer(t[1], line_no, "vertex");
    const long long c = to_integer(t[2], line_no, "color");
    const long long w = to_integer(t[3], line_no, "weight");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "loops are not allowed");
    if (c < 1 || c > k) throw ParseError(line_no, "color out of range");
    if (w < 0) throw ParseError(line_no, "weight must be nonnegative");
    edges.push_back(Edge{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1),
                         static_cast<Color>(c), w});
  }
  if (next()) throw ParseError(line_no, "unexpected content after the last edge line");
  return ColoredMultigraph(static_cast<std::size_t>(n), static_cast<Color>(k), std::move(edges));
}

ColoredMultigraph read_instance_file(const std::string& path) {
  auto in = open(path);
  return parse_instance(in);
}

void write_instance(const ColoredMultigraph& g, std::ostream& out) {
  out << "ecg " << g.num_vertices() << ' ' << g.num_colors() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.color << ' ' << e.weight << '\n';
  }
}

PCWalk parse_tour(const ColoredMultigraph& g, std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(1, "empty tour");

  std::vector<long long> items;
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, std::string("invalid result document: ") + e.what());
    }
    if (!doc.contains("tour") || !doc["tour"].is_array()) {
      throw ParseError(1, "result document has no tour");
    }
    for (const auto& item : doc["tour"]) {
      if (item.is_number_integer()) {
        items.push_back(item.get<long long>());
      } else if (item.is_object() && item.contains("edge") && item["edge"].is_number_integer()) {
        items.push_back(item["edge"].get<long long>());
      } else {
        throw ParseError(1, "tour entries must be vertex ids or {\"edge\": id} objects");
      }
    }
    return build_tour(g, items, 1);
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  for (; std::getline(lines, line);) {
    ++line_no;
    if (skippable(line)) continue;
    for (const auto& t : tokens(line)) items.push_back(to_integer(t, line_no, "tour id"));
  }
  return build_tour(g, items, line_no);
}

PCWalk read_tour_file(const ColoredMultigraph& g, const std::string& path) {
  auto in = open(path);
  return parse_tour(g, in);
}

nlohmann::ordered_json result_document(const ColoredMultigraph& g, const Solution& sol) {
  nlohmann::ordered_json doc;
  doc["status"] = to_string(sol.status);
  if (sol.status == Status::infeasible) {
    doc["reason"] = to_string(sol.reason);
    return doc;
  }
  doc["total_weight"] = sol.total_weight;
  doc["matching_weight"] = sol.matching_weight;
  auto edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    nlohmann::ordered_json item;
    item["id"] = e + 1;
    item["u"] = ed.u + 1;
    item["v"] = ed.v + 1;
    item["color"] = ed.color;
    item["weight"] = ed.weight;
    item["multiplicity"] = sol.multiplicity.at(e);
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  auto tour = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sol.walk.edges.size(); ++i) {
    tour.push_back(sol.walk.vertices[i] + 1);
    nlohmann::ordered_json step;
    step["edge"] = sol.walk.edges[i] + 1;
    step["color"] = g.edge(sol.walk.edges[i]).color;
    tour.push_back(std::move(step));
  }
  if (!sol.walk.vertices.empty()) tour.push_back(sol.walk.vertices.back() + 1);
  doc["tour"] = std::move(tour);
  return doc;
}

std::string render(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ecg::io
