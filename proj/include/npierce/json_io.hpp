#pragma once

// JSON and CSV serialisation. Objects use sorted keys and doubles print in
// shortest round-trip form, so identical inputs give byte-identical output.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "npierce/dsseq.hpp"
#include "npierce/embedded_graph.hpp"
#include "npierce/girthmax.hpp"
#include "npierce/pq_pipeline.hpp"
#include "npierce/regions.hpp"
#include "npierce/setsystem.hpp"

namespace npierce {

using Json = nlohmann::json;

Json to_json(const SetFamily& family);
SetFamily set_family_from_json(const Json& j);

Json to_json(const PiercingCertificate& cert);
Json to_json(const SimpleGraph& graph);

// {"vertices": n, "edges": [[u,v],...], "rotation": [[dart,...],...]}; when
// "rotation" is absent, "neighbors" (cyclic neighbour lists) is accepted.
Json to_json(const EmbeddedGraph& g);
EmbeddedGraph embedded_graph_from_json(const Json& j);

Json to_json(const DiskFamily& d);
DiskFamily disk_family_from_json(const Json& j);

Json to_json(const MaximalityReport& r);
Json to_json(const PartitionReport& r);
Json to_json(const FaceBoundReport& r);
Json to_json(const FmaxResult& r);
Json to_json(const DsMaxResult& r);
Json to_json(const FractionalPiercing& r);
Json summary_json(const ExperimentStats& s);

void write_search_log_csv(std::ostream& out, const FmaxResult& r);
void write_ds_csv(std::ostream& out, const DsMaxResult& r);
void write_trials_csv(std::ostream& out, const ExperimentStats& s);
void write_discretization_csv(std::ostream& out, const DiskDiscretization& d);

std::string dump(const Json& j);  // two-space indent, trailing newline
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace npierce
