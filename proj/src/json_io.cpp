#include "npierce/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "npierce/errors.hpp"

namespace npierce {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const SetFamily& family) {
  Json j;
  j["universe"] = family.universe_size();
  j["sets"] = family.sets();
  if (!family.labels().empty()) j["labels"] = family.labels();
  return j;
}

SetFamily set_family_from_json(const Json& j) {
  auto universe = get<std::size_t>(j, "universe");
  auto sets = get<std::vector<std::vector<int>>>(j, "sets");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
  return SetFamily(universe, std::move(sets), std::move(labels));
}

Json to_json(const PiercingCertificate& cert) {
  return Json{{"points", cert.points},
              {"covered", cert.covered},
              {"optimal", cert.optimal},
              {"size", cert.size()}};
}

Json to_json(const SimpleGraph& graph) {
  Json edges = Json::array();
  for (auto [u, v] : graph.edges) edges.push_back({u, v});
  return Json{{"vertices", graph.vertex_count}, {"edges", edges}};
}

Json to_json(const EmbeddedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}, {"rotation", g.rotations()}};
}

EmbeddedGraph embedded_graph_from_json(const Json& j) {
  if (j.is_object() && !j.contains("rotation") && j.contains("neighbors"))
    return EmbeddedGraph::from_neighbor_order(get<std::vector<std::vector<int>>>(j, "neighbors"));
  auto n = get<int>(j, "vertices");
  auto edges = get<std::vector<std::array<int, 2>>>(j, "edges");
  auto rotation = get<std::vector<std::vector<int>>>(j, "rotation");
  return EmbeddedGraph(n, std::move(edges), std::move(rotation));
}

Json to_json(const DiskFamily& d) {
  Json disks = Json::array();
  for (const auto& disk : d.disks)
    disks.push_back(Json{{"c", {disk.center.x, disk.center.y}}, {"r", disk.radius}});
  return Json{{"disks", disks}, {"seed", d.seed}, {"mode", to_string(d.mode)}};
}

DiskFamily disk_family_from_json(const Json& j) {
  DiskFamily d;
  for (const auto& item : field(j, "disks")) {
    auto c = get<std::array<double, 2>>(item, "c");
    Disk disk{{c[0], c[1]}, get<double>(item, "r")};
    if (!(disk.radius > 0)) throw InvalidInput("disk radius must be positive");
    d.disks.push_back(disk);
  }
  if (j.contains("seed")) d.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("mode")) d.mode = disk_mode_from_string(get<std::string>(j, "mode"));
  return d;
}

Json to_json(const MaximalityReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.addable_pairs) pairs.push_back(Json{{"u", p.u}, {"v", p.v}, {"face", p.face}});
  return Json{{"girth", r.girth ? Json(*r.girth) : Json(nullptr)},
              {"girth_ok", r.girth_ok},
              {"addable_pairs", pairs},
              {"is_maximal", r.is_maximal},
              {"max_face_length", r.max_face_length}};
}

Json to_json(const PartitionReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs)
    runs.push_back(Json{{"class", run.cls}, {"start", run.start}, {"length", run.length}});
  return Json{{"cycle", r.cycle},
              {"pierce", r.pierce},
              {"classes", r.classes},
              {"distance", r.distance},
              {"runs", runs},
              {"pierces", r.pierces},
              {"run_length_ok", r.run_length_ok},
              {"unimodal_ok", r.unimodal_ok},
              {"alternation_ok", r.alternation_ok},
              {"alternation_b", r.alternation_b},
              {"bound_value", r.bound_value},
              {"cycle_length", r.cycle_length},
              {"ell", r.ell},
              {"bound_holds", r.cycle_length <= r.bound_value}};
}

Json to_json(const FaceBoundReport& r) {
  return Json{{"ell", r.ell},
              {"working_ell", r.working_ell},
              {"subdivided", r.subdivided},
              {"face_length", r.face_length},
              {"pierce_size", r.pierce_size},
              {"partition", to_json(r.partition)},
              {"pairwise_intersecting", r.pairwise_intersecting},
              {"non_piercing", r.non_piercing},
              {"cross_free", r.cross_free},
              {"bound_on_input", r.bound_on_input},
              {"bound_holds", r.bound_holds},
              {"all_checks_hold", r.all_checks_hold}};
}

Json to_json(const FmaxResult& r) {
  Json witnesses = Json::array();
  for (const auto& g : r.maximal_witnesses) witnesses.push_back(to_json(g));
  return Json{{"ell", r.ell},
              {"n_max", r.n_max},
              {"best_face_length", r.best_face_length},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"maximal_witnesses", witnesses},
              {"complete", r.complete},
              {"nodes_expanded", r.nodes_expanded},
              {"maximal_found", r.maximal_found}};
}

Json to_json(const DsMaxResult& r) {
  return Json{{"t", r.t},       {"b", r.b},         {"length", r.length},
              {"witness", r.witness}, {"optimal", r.optimal}, {"nodes", r.nodes}};
}

Json to_json(const FractionalPiercing& r) {
  Json j{{"weights", r.weights},   {"tau_star", r.tau_star}, {"nu_star", r.nu_star},
         {"packing", r.packing},   {"exact", r.exact},       {"precision_reached", r.precision_reached}};
  if (r.exact) j["tau_star_rational"] = r.tau_star_rational;
  return j;
}

Json summary_json(const ExperimentStats& s) {
  return Json{{"p", s.p},
              {"q", s.q},
              {"nu", s.nu},
              {"genus", s.genus},
              {"trials", s.trials},
              {"seed", s.seed},
              {"mean_survivors", s.mean_survivors},
              {"mean_edges", s.mean_edges},
              {"sd_edges", s.sd_edges},
              {"stderr_edges", s.stderr_edges},
              {"lower_bound", s.lower_bound},
              {"upper_bound", s.upper_bound},
              {"planar_certified", s.planar_certified},
              {"trials_within_edge_bound", s.trials_within_edge_bound},
              {"first_violating_trial", s.first_violating_trial},
              {"mean_above_lower", s.mean_above_lower},
              {"mean_below_upper", s.mean_below_upper}};
}

void write_search_log_csv(std::ostream& out, const FmaxResult& r) {
  // wall-clock time is left out so reruns stay byte-identical
  out << "vertices,edges,states,nodes_expanded,best_face\n";
  for (const auto& row : r.log)
    out << row.vertices << ',' << row.edges << ',' << row.states << ',' << row.nodes_expanded << ','
        << row.best_face << '\n';
}

void write_ds_csv(std::ostream& out, const DsMaxResult& r) {
  out << "t,b,length,optimal,nodes,witness\n";
  out << r.t << ',' << r.b << ',' << r.length << ',' << (r.optimal ? 1 : 0) << ',' << r.nodes << ',';
  for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << r.witness[i];
  out << '\n';
}

void write_trials_csv(std::ostream& out, const ExperimentStats& s) {
  out << "trial,survivors,edges\n";
  for (std::size_t k = 0; k < s.per_trial.size(); ++k)
    out << k << ',' << s.per_trial[k].survivors << ',' << s.per_trial[k].edges << '\n';
}

void write_discretization_csv(std::ostream& out, const DiskDiscretization& d) {
  out << "sets,universe,circle_crossings,lens_witnesses,degenerate\n";
  out << d.family.size() << ',' << d.family.universe_size() << ',' << d.circle_crossings << ','
      << d.lens_witnesses << ',' << d.degenerate << '\n';
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("parse error in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace npierce
