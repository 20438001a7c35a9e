// JSON forms of graphs, update systems and reports.
//
// Graph:  {"n": 3, "edges": [[1, 2], [2, 3]]}, or the string "complete:<n>"
//         (also "edgeless:<n>").
// System: {"graph": <graph>,
//          "states": [["0", "1", "2"], ["0", "1"]],
//          "functions": [{"vertex": 1, "table": [{"args": ["0"], "out": "1"}, ...]},
//                        ...]}
//         `args` lists the states of the out-neighbours in ascending vertex
//         order; every tuple must appear exactly once.

#ifndef KSDS_IO_HPP_
#define KSDS_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "ksds/conjecture.hpp"
#include "ksds/dag.hpp"
#include "ksds/hecke_kiselman.hpp"
#include "ksds/kiselman.hpp"
#include "ksds/sds.hpp"
#include "ksds/universal.hpp"
#include "ksds/word.hpp"

namespace ksds {

  using json = nlohmann::json;

  constexpr int schema_version = 1;

  //! Throws ParseError.
  json load_json_file(std::string const& path);

  //! Throws ParseError or InvalidArgument.
  Dag graph_from_json(json const& j);
  json graph_to_json(Dag const& g);
  //! "complete:<n>", "edgeless:<n>", inline JSON text or a path to a JSON
  //! file.
  Dag parse_graph_spec(std::string_view spec);

  UpdateSystem system_from_json(json const& j);
  json system_to_json(UpdateSystem const& sys);

  json kn_report(KnMonoid const& kn, WordFormat fmt, bool list);
  json hk_report(HkClasses const&      classes,
                 HkPresentation const& pres,
                 WordFormat            fmt,
                 bool                  list);
  json theorem_report(TheoremReport const& report, WordFormat fmt);
  json isomorphism_report(IsomorphismReport const& report);
  json relation_report(RelationReport const& report);
  json dynamics_report(DynamicsMonoid const& monoid, WordFormat fmt);
  //! Runtimes are left out unless `timings` is set, so that reports are
  //! reproducible byte for byte.
  json sweep_report(SweepReport const& report, bool timings);

}  // namespace ksds

#endif  // KSDS_IO_HPP_
