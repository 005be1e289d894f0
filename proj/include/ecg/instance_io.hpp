#pragma once

// Text formats shared by the CLI and the tests.
//
// Instance file (1-based vertex ids, '#' starts a comment line):
//
//   ecg <n> <k> <m>
//   <u> <v> <color> <weight>     (m lines)
//
// Tour file: either whitespace-separated "v0 e1 v1 e2 ... v0" with 1-based
// vertex and edge ids, or a result document whose "tour" array is used.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ecg/graph.hpp"
#include "ecg/solver.hpp"
#include "ecg/walk.hpp"

namespace ecg::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ColoredMultigraph parse_instance(std::istream& in);
ColoredMultigraph read_instance_file(const std::string& path);
void write_instance(const ColoredMultigraph& g, std::ostream& out);

// Vertex and edge ids are checked against g; adjacency, colors and coverage
// are left to verify_pc_closed_walk. The walk weight is summed from g.
PCWalk parse_tour(const ColoredMultigraph& g, std::istream& in);
PCWalk read_tour_file(const ColoredMultigraph& g, const std::string& path);

// Field order: status, [reason], total_weight, matching_weight, edges, tour.
// Ids are 1-based throughout.
nlohmann::ordered_json result_document(const ColoredMultigraph& g, const Solution& sol);
std::string render(const nlohmann::ordered_json& doc);

}  // namespace ecg::io
