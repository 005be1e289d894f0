// ecg: command-line front end for the colored postman solver.
//
// Exit codes: 0 success / optimal / already PC Euler / tour verified,
//             2 infeasible / not PC Euler / tour rejected,
//             1 usage, parse or internal errors.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ecg/aux_graph.hpp"
#include "ecg/instance_io.hpp"
#include "ecg/oracle.hpp"
#include "ecg/pc_euler.hpp"
#include "ecg/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

int cmd_solve(const std::string& path, bool quiet, bool no_verify, bool dump_aux) {
  const ecg::ColoredMultigraph g = ecg::io::read_instance_file(path);
  ecg::SolveOptions options;
  options.verify = !no_verify;
  ecg::SolveTrace trace;
  const ecg::Solution sol = ecg::solve(g, options, dump_aux ? &trace : nullptr);

  if (dump_aux) {
    const std::string aux_path = path + ".aux";
    if (trace.aux) {
      std::ofstream out(aux_path);
      if (!out) throw std::runtime_error("cannot write " + aux_path);
      ecg::dump_aux_graph(*trace.aux, out);
    } else {
      std::cerr << "ecg: no auxiliary graph was built (" << ecg::to_string(sol.reason) << ")\n";
    }
  }

  if (quiet) {
    std::cout << ecg::to_string(sol.status) << ' '
              << (sol.status == ecg::Status::optimal ? std::to_string(sol.total_weight)
                                                     : ecg::to_string(sol.reason))
              << '\n';
  } else {
    std::cout << ecg::io::render(ecg::io::result_document(g, sol));
  }
  return sol.status == ecg::Status::optimal ? kOk : kNegative;
}

int cmd_check(const std::string& path) {
  const ecg::ColoredMultigraph g = ecg::io::read_instance_file(path);
  std::cout << "vertex degree even dominant balanced\n";
  for (ecg::VertexId u = 0; u < g.num_vertices(); ++u) {
    const ecg::ColorDegreeProfile p = ecg::color_degrees(g, u);
    std::cout << u + 1 << ' ' << p.degree << ' ' << (p.degree % 2 == 0 ? "yes" : "no") << ' '
              << (p.dominant ? std::to_string(*p.dominant) : "-") << ' '
              << (p.dominant ? "no" : "yes") << '\n';
  }
  std::cout << "connected " << (ecg::is_connected(g) ? "yes" : "no") << '\n';
  const ecg::KotzigReport r = ecg::kotzig_check(g);
  if (r.feasible()) {
    std::cout << "pc-euler yes\n";
    return kOk;
  }
  std::cout << "pc-euler no (" << ecg::to_string(r.violation);
  if (r.vertex) std::cout << " at vertex " << *r.vertex + 1;
  std::cout << ")\n";
  return kNegative;
}

int cmd_verify(const std::string& instance, const std::string& tour_path) {
  const ecg::ColoredMultigraph g = ecg::io::read_instance_file(instance);
  const ecg::PCWalk tour = ecg::io::read_tour_file(g, tour_path);
  const ecg::WalkReport r = ecg::verify_pc_closed_walk(g, tour, ecg::Coverage::at_least_once);
  if (r.ok()) {
    std::cout << "pass weight " << r.weight << '\n';
    return kOk;
  }
  std::cout << "fail " << ecg::to_string(r.failure) << ": " << r.message << '\n';
  return kNegative;
}

int cmd_oracle(const std::string& path, std::uint32_t bound) {
  const ecg::ColoredMultigraph g = ecg::io::read_instance_file(path);
  nlohmann::ordered_json doc;
  if (!ecg::is_connected(g)) {
    doc["status"] = "infeasible";
    doc["reason"] = "disconnected";
    std::cout << ecg::io::render(doc);
    return kNegative;
  }
  const auto best = ecg::oracle::oracle_solve(g, bound);
  doc["status"] = best ? "optimal" : "infeasible";
  doc["bound"] = bound;
  if (best) {
    doc["total_weight"] = best->weight;
    doc["multiplicity"] = best->multiplicity;
  }
  std::cout << ecg::io::render(doc);
  return best ? kOk : kNegative;
}

int cmd_gen(std::size_t n, ecg::Color k, std::size_t m, ecg::Weight max_w, std::uint64_t seed) {
  ecg::io::write_instance(ecg::oracle::gen_random_instance(n, k, m, max_w, seed), std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-weight properly colored closed walks covering every edge"};
  app.require_subcommand(1);

  std::string file, tour;
  bool quiet = false, no_verify = false, dump_aux = false;
  auto* solve = app.add_subcommand("solve", "solve an instance and print the result document");
  solve->add_option("file", file, "instance file")->required();
  solve->add_flag("--quiet", quiet, "print only the status and total weight");
  solve->add_flag("--no-verify", no_verify, "skip internal verification (benchmarking only)");
  solve->add_flag("--dump-aux", dump_aux, "write the auxiliary matching graph to FILE.aux");

  auto* check = app.add_subcommand("check", "test whether the instance is already PC Euler");
  check->add_option("file", file, "instance file")->required();

  auto* verify = app.add_subcommand("verify", "verify a tour against an instance");
  verify->add_option("file", file, "instance file")->required();
  verify->add_option("tour", tour, "tour file (plain ids or a result document)")->required();

  std::uint32_t bound = 3;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum over multiplicities <= B");
  oracle->add_option("file", file, "instance file")->required();
  oracle->add_option("--bound,-B", bound, "multiplicity bound")->check(CLI::Range(1u, 64u));

  std::size_t n = 0, m = 0;
  ecg::Color k = 0;
  ecg::Weight max_w = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "write a random connected instance");
  gen->add_option("n", n, "vertices")->required();
  gen->add_option("k", k, "colors")->required();
  gen->add_option("m", m, "edges")->required();
  gen->add_option("max_w", max_w, "maximum weight")->required();
  gen->add_option("seed", seed, "seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*solve) return cmd_solve(file, quiet, no_verify, dump_aux);
    if (*check) return cmd_check(file);
    if (*verify) return cmd_verify(file, tour);
    if (*oracle) return cmd_oracle(file, bound);
    if (*gen) return cmd_gen(n, k, m, max_w, seed);
  } catch (const ecg::io::ParseError& e) {
    std::cerr << "ecg: parse error: " << e.what() << '\n';
  } catch (const ecg::SolverBug& e) {
    std::cerr << "ecg: internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "ecg: " << e.what() << '\n';
  }
  return kError;
}
