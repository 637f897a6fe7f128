// npierce: batch front end. Exit 0 on success, 2 when a checked claim is
// violated, 1 on any error.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "npierce/dsseq.hpp"
#include "npierce/errors.hpp"
#include "npierce/girthmax.hpp"
#include "npierce/json_io.hpp"
#include "npierce/pq_pipeline.hpp"
#include "npierce/regions.hpp"
#include "npierce/setsystem.hpp"

using namespace npierce;

namespace {

constexpr int kViolation = 2;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget_nodes;
  double budget_secs = 0;
  int threads = 1;
};

std::uint64_t require_seed(const Globals& g, const std::string& command) {
  if (!g.seed) throw InvalidInput(command + " is randomized and needs an explicit --seed");
  return *g.seed;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

// A family file holds either a set family or a disk family ("disks" key);
// disk families are discretised and flagged so disk-specific claims apply.
struct LoadedFamily {
  SetFamily family;
  bool from_disks = false;
};

LoadedFamily load_family(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("disks"))
    return {disks_to_set_system(disk_family_from_json(j)).family, true};
  return {set_family_from_json(j), false};
}

SolverLimits limits_from(const Globals& g) {
  SolverLimits lim;
  if (g.budget_nodes) lim.node_budget = *g.budget_nodes;
  return lim;
}

FacialWalk pick_face(const EmbeddedGraph& g, std::optional<int> dart) {
  if (dart) {
    if (*dart < 0 || *dart >= g.dart_count()) throw InvalidInput("face dart out of range");
    return face_from_dart(g, *dart);
  }
  auto faces = trace_faces(g);
  if (faces.empty()) throw InvalidInput("graph has no faces");
  std::size_t best = 0;
  for (std::size_t f = 1; f < faces.size(); ++f)
    if (faces[f].length() > faces[best].length()) best = f;
  return faces[best];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npierce: piercing numbers, non-piercing regions and long faces in plane graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--seed", glob.seed, "RNG seed (required by randomized commands)");
  app.add_option("--budget-nodes", glob.budget_nodes, "node budget for searches and solvers");
  app.add_option("--budget-secs", glob.budget_secs,
                 "wall-clock limit for fmax-search (0 = none; breaks reproducibility)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", glob.threads, "OpenMP threads (default 1)")->check(CLI::PositiveNumber);

  std::string input;
  std::string output;
  std::string csv;
  int ell = 4;
  int n_max = 8;
  int t = 3;
  int b = 2;
  int q = 3;
  std::uint64_t trials = 1000;
  int genus = 0;
  std::optional<int> nu;
  std::optional<int> face_dart;
  std::vector<int> pierce;
  int n = 10;
  std::string mode = "general";
  std::string family_out;
  bool heuristic = false;

  auto* pierce_cmd = app.add_subcommand("pierce", "minimum piercing set of a family");
  pierce_cmd->add_option("-i,--input", input, "set or disk family JSON")->required();
  pierce_cmd->add_option("-o,--output", output, "certificate JSON (default stdout)");
  pierce_cmd->add_flag("--heuristic", heuristic, "LP + epsilon-net hitting set instead of exact");

  auto* vc_cmd = app.add_subcommand("vc", "VC and dual VC dimension");
  vc_cmd->add_option("-i,--input", input, "set or disk family JSON")->required();
  vc_cmd->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* del_cmd = app.add_subcommand("delaunay", "Delaunay graph and planarity verdict");
  del_cmd->add_option("-i,--input", input, "set or disk family JSON")->required();
  del_cmd->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* fmax_cmd = app.add_subcommand("fmax-search", "search maximal plane graphs for long faces");
  fmax_cmd->add_option("--ell", ell, "girth bound")->required()->check(CLI::Range(3, 64));
  fmax_cmd->add_option("--n-max", n_max, "vertex limit")->required()->check(CLI::Range(3, 64));
  fmax_cmd->add_option("-o,--output", output, "result JSON (default stdout)");
  fmax_cmd->add_option("--log", csv, "search log CSV");

  auto* vm_cmd = app.add_subcommand("verify-maximal", "maximality of an embedded graph");
  vm_cmd->add_option("-i,--input", input, "embedded graph JSON")->required();
  vm_cmd->add_option("--ell", ell, "girth bound")->required()->check(CLI::Range(3, 1 << 20));
  vm_cmd->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* part_cmd = app.add_subcommand("partition", "pierce-point partition of a facial cycle");
  part_cmd->add_option("-i,--input", input, "embedded graph JSON")->required();
  part_cmd->add_option("--ell", ell, "girth bound")->required()->check(CLI::Range(3, 1 << 20));
  part_cmd->add_option("--face-dart", face_dart, "a dart on the face (default: longest face)");
  part_cmd->add_option("--pierce", pierce, "pierce vertices (default: exact minimum)");
  part_cmd->add_option("-b", b, "alternation order")->check(CLI::Range(2, 64));
  part_cmd->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* ds_cmd = app.add_subcommand("ds-max", "longest Davenport-Schinzel sequence");
  ds_cmd->add_option("-t", t, "alphabet size")->required()->check(CLI::Range(1, 64));
  ds_cmd->add_option("-b", b, "order")->required()->check(CLI::Range(2, 64));
  ds_cmd->add_option("-o,--output", output, "CSV row (default stdout)");
  ds_cmd->add_option("--json", family_out, "also write the result as JSON");

  auto* cs_cmd = app.add_subcommand("cs-experiment", "random-deletion Delaunay edge experiment");
  cs_cmd->add_option("-i,--input", input, "set or disk family JSON")->required();
  cs_cmd->add_option("-q", q, "keep each set with probability 1/q")->required()->check(CLI::Range(2, 1 << 20));
  cs_cmd->add_option("--trials", trials, "number of trials")->required()->check(CLI::PositiveNumber);
  cs_cmd->add_option("--genus", genus, "surface genus for the edge bound")->check(CLI::NonNegativeNumber);
  cs_cmd->add_option("--nu", nu, "independence number (default: computed exactly)");
  cs_cmd->add_option("-o,--output", output, "summary JSON (default stdout)");
  cs_cmd->add_option("--csv", csv, "per-trial CSV");

  auto* gen_cmd = app.add_subcommand("gen-disks", "random disk family and its discretisation");
  gen_cmd->add_option("-n", n, "number of disks")->required()->check(CLI::Range(1, 100000));
  gen_cmd->add_option("--mode", mode, "general | pairwise-intersecting");
  gen_cmd->add_option("-o,--output", output, "disk family JSON (default stdout)");
  gen_cmd->add_option("--family", family_out, "set family JSON");
  gen_cmd->add_option("--stats", csv, "discretisation CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  omp_set_num_threads(glob.threads);
  try {
    int status = 0;
    if (*pierce_cmd) {
      auto loaded = load_family(input);
      PiercingCertificate cert = heuristic ? pq_hitting_set(loaded.family, glob.seed.value_or(0))
                                           : min_piercing(loaded.family, limits_from(glob));
      if (!hits_all(loaded.family, cert.points)) status = kViolation;
      Json j = to_json(cert);
      j["sets"] = loaded.family.size();
      emit(output, dump(j));
    } else if (*vc_cmd) {
      auto loaded = load_family(input);
      const auto lim = limits_from(glob);
      Json j{{"vc", vc_dimension(loaded.family, lim)},
             {"dual_vc", dual_vc_dimension(loaded.family, lim)},
             {"sets", loaded.family.size()},
             {"from_disks", loaded.from_disks}};
      if (loaded.from_disks && j["dual_vc"].get<int>() > 4) {
        j["violation"] = "dual VC dimension of a disk family exceeds 4";
        status = kViolation;
      }
      emit(output, dump(j));
    } else if (*del_cmd) {
      auto loaded = load_family(input);
      SimpleGraph d = delaunay_graph(loaded.family);
      const bool planar = is_planar(d);
      const bool sparse = d.edges.size() <= 3 * loaded.family.size();
      Json j = to_json(d);
      j["planar"] = planar;
      j["edges_within_3n"] = sparse;
      j["from_disks"] = loaded.from_disks;
      if (loaded.from_disks && !(planar && sparse)) {
        j["violation"] = "Delaunay graph of a disk family is not planar or too dense";
        status = kViolation;
      }
      emit(output, dump(j));
    } else if (*fmax_cmd) {
      SearchBudget budget;
      if (glob.budget_nodes) budget.nodes = *glob.budget_nodes;
      budget.seconds = glob.budget_secs;
      FmaxResult r = search_fmax(ell, n_max, budget);
      Json j = to_json(r);
      j["conjectured_value"] = 2 * ell - 3;
      if (ell <= 6 && r.best_face_length > 2 * ell - 3) {
        j["violation"] = "face longer than 2*ell-3 in a maximal graph";
        status = kViolation;
      }
      emit(output, dump(j));
      if (!csv.empty()) {
        std::ostringstream os;
        write_search_log_csv(os, r);
        write_text_file(csv, os.str());
      }
    } else if (*vm_cmd) {
      EmbeddedGraph g = embedded_graph_from_json(read_json_file(input));
      emit(output, dump(to_json(verify_maximal(g, ell))));
    } else if (*part_cmd) {
      EmbeddedGraph g = embedded_graph_from_json(read_json_file(input));
      FacialWalk face = pick_face(g, face_dart);
      Json j;
      bool ok;
      if (pierce.empty()) {
        FaceBoundReport rep = analyze_face(g, face, ell, b);
        ok = rep.all_checks_hold;
        j = to_json(rep);
      } else {
        PartitionReport rep = partition_cycle(g, face.vertices, pierce, ell, b);
        ok = rep.pierces && rep.run_length_ok && rep.unimodal_ok && rep.alternation_ok &&
             rep.cycle_length <= rep.bound_value;
        j = to_json(rep);
      }
      // A failing check only contradicts the face-length bound on a maximal host.
      const bool maximal = verify_maximal(g, ell).is_maximal;
      j["host_maximal"] = maximal;
      if (!ok && maximal) status = kViolation;
      emit(output, dump(j));
    } else if (*ds_cmd) {
      DsMaxResult r = glob.budget_nodes ? max_ds_length(t, b, *glob.budget_nodes) : max_ds_length(t, b);
      std::ostringstream os;
      write_ds_csv(os, r);
      emit(output, os.str());
      if (!family_out.empty()) write_text_file(family_out, dump(to_json(r)));
      if (b == 2 && r.optimal && r.length != 2 * t - 1) status = kViolation;
    } else if (*cs_cmd) {
      const std::uint64_t seed = require_seed(glob, "cs-experiment");
      auto loaded = load_family(input);
      ExperimentStats s = clarkson_shor_experiment(loaded.family, q, trials, seed, genus, nu);
      emit(output, dump(summary_json(s)));
      if (!csv.empty()) {
        std::ostringstream os;
        write_trials_csv(os, s);
        write_text_file(csv, os.str());
      }
      if ((s.planar_certified || genus > 0) && !s.trials_within_edge_bound) status = kViolation;
    } else if (*gen_cmd) {
      const std::uint64_t seed = require_seed(glob, "gen-disks");
      DiskFamily d = random_disk_family(n, seed, disk_mode_from_string(mode));
      emit(output, dump(to_json(d)));
      if (!family_out.empty() || !csv.empty()) {
        DiskDiscretization disc = disks_to_set_system(d);
        if (!family_out.empty()) write_text_file(family_out, dump(to_json(disc.family)));
        if (!csv.empty()) {
          std::ostringstream os;
          write_discretization_csv(os, disc);
          write_text_file(csv, os.str());
        }
      }
    }
    return status;
  } catch (const ResourceLimit& e) {
    std::cerr << "npierce: resource limit: " << e.what() << '\n';
  } catch (const InvalidInput& e) {
    std::cerr << "npierce: invalid input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "npierce: error: " << e.what() << '\n';
  }
  return 1;
}
