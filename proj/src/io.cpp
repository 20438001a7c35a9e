#include "ksds/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ksds/errors.hpp"

namespace ksds {

  namespace {
    std::size_t parse_count(std::string_view text, std::string_view what) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("invalid " + std::string(what) + ": \"" + std::string(text) + "\"");
      }
      return value;
    }

    template <typename T>
    T get_field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
      }
    }

    json words_json(std::vector<Word> const& words, WordFormat fmt) {
      json out = json::array();
      for (auto const& w : words) {
        out.push_back(to_string(w, fmt));
      }
      return out;
    }
  }  // namespace

  json load_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  Dag graph_from_json(json const& j) {
    if (j.is_string()) {
      return parse_graph_spec(j.get<std::string>());
    }
    auto n     = get_field<std::size_t>(j, "n");
    auto edges = get_field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "edges");
    return Dag(n, std::move(edges));
  }

  json graph_to_json(Dag const& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) {
      edges.push_back({i, j});
    }
    return {{"n", g.n()}, {"edges", edges}};
  }

  Dag parse_graph_spec(std::string_view spec) {
    if (spec.starts_with("complete:")) {
      return Dag::complete(parse_count(spec.substr(9), "vertex count"));
    }
    if (spec.starts_with("edgeless:")) {
      return Dag::edgeless(parse_count(spec.substr(9), "vertex count"));
    }
    if (!spec.empty() && spec.front() == '{') {
      try {
        return graph_from_json(json::parse(spec));
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
      }
    }
    return graph_from_json(load_json_file(std::string(spec)));
  }

  UpdateSystem system_from_json(json const& j) {
    if (!j.is_object() || !j.contains("graph")) {
      throw ParseError("missing field \"graph\"");
    }
    Dag  g      = graph_from_json(j.at("graph"));
    auto states = get_field<std::vector<std::vector<std::string>>>(j, "states");
    if (states.size() != g.n()) {
      throw ParseError("\"states\" must list one state set per vertex");
    }
    std::vector<std::map<std::string, std::size_t>> lookup(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
      for (std::size_t k = 0; k < states[v].size(); ++k) {
        lookup[v].emplace(states[v][k], k);
      }
    }
    auto find_state = [&](Vertex v, std::string const& name) {
      auto it = lookup[v - 1].find(name);
      if (it == lookup[v - 1].end()) {
        throw ParseError("\"" + name + "\" is not a state of vertex " + std::to_string(v));
      }
      return it->second;
    };

    std::vector<std::vector<std::size_t>> tables(g.n());
    std::vector<bool>                     seen_vertex(g.n(), false);
    if (!j.contains("functions") || !j.at("functions").is_array()) {
      throw ParseError("missing array \"functions\"");
    }
    for (auto const& f : j.at("functions")) {
      auto v = get_field<std::size_t>(f, "vertex");
      if (v == 0 || v > g.n() || seen_vertex[v - 1]) {
        throw ParseError("bad or repeated function vertex " + std::to_string(v));
      }
      seen_vertex[v - 1] = true;
      auto const& nbrs   = g.out_neighbors(v);
      std::size_t count  = 1;
      for (Vertex nb : nbrs) {
        count *= states[nb - 1].size();
      }
      constexpr std::size_t unset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> table(count, unset);
      if (!f.contains("table") || !f.at("table").is_array()) {
        throw ParseError("function of vertex " + std::to_string(v) + " has no table");
      }
      for (auto const& entry : f.at("table")) {
        auto args = get_field<std::vector<std::string>>(entry, "args");
        auto out  = get_field<std::string>(entry, "out");
        if (args.size() != nbrs.size()) {
          throw ParseError("vertex " + std::to_string(v) + " expects "
                           + std::to_string(nbrs.size()) + " arguments");
        }
        std::size_t k = 0;
        for (std::size_t p = 0; p < nbrs.size(); ++p) {
          k = k * states[nbrs[p] - 1].size() + find_state(nbrs[p], args[p]);
        }
        if (table[k] != unset) {
          throw ParseError("vertex " + std::to_string(v) + " lists an argument tuple twice");
        }
        table[k] = find_state(v, out);
      }
      for (auto x : table) {
        if (x == unset) {
          throw ParseError("the table of vertex " + std::to_string(v) + " is not total");
        }
      }
      tables[v - 1] = std::move(table);
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (!seen_vertex[v]) {
        throw ParseError("no function given for vertex " + std::to_string(v + 1));
      }
    }
    return UpdateSystem(std::move(g), std::move(states), std::move(tables));
  }

  json system_to_json(UpdateSystem const& sys) {
    json states = json::array();
    json funcs  = json::array();
    for (Vertex v = 1; v <= sys.n(); ++v) {
      states.push_back(sys.state_names(v));
      auto const& nbrs  = sys.graph().out_neighbors(v);
      json        table = json::array();
      for (std::size_t k = 0; k < sys.argument_count(v); ++k) {
        auto tuple = sys.argument_tuple(v, k);
        json args  = json::array();
        for (std::size_t p = 0; p < nbrs.size(); ++p) {
          args.push_back(sys.state_name(nbrs[p], tuple[p]));
        }
        table.push_back({{"args", args}, {"out", sys.state_name(v, sys.table(v)[k])}});
      }
      funcs.push_back({{"vertex", v}, {"table", table}});
    }
    return {{"graph", graph_to_json(sys.graph())}, {"states", states}, {"functions", funcs}};
  }

  json kn_report(KnMonoid const& kn, WordFormat fmt, bool list) {
    json out = {{"schema", schema_version}, {"n", kn.n()}, {"size", kn.size()},
                {"max_length", kn.max_length()}};
    if (list) {
      out["elements"] = words_json(kn.words(), fmt);
    }
    return out;
  }

  json hk_report(HkClasses const&      classes,
                 HkPresentation const& pres,
                 WordFormat            fmt,
                 bool                  list) {
    json out = {{"schema", schema_version},
                {"n", pres.n()},
                {"edges", graph_to_json(pres.graph())["edges"]},
                {"size", classes.size()},
                {"bound", classes.bound}};
    if (list) {
      std::vector<Word> reps;
      for (auto const& w : classes.representatives) {
        reps.push_back(pres.to_external(w));
      }
      out["representatives"] = words_json(reps, fmt);
    }
    return out;
  }

  json theorem_report(TheoremReport const& report, WordFormat fmt) {
    json bad = json::array();
    for (auto const& c : report.counterexamples) {
      json entry = {{"word", to_string(c.word, fmt)}, {"check", to_string(c.check)}};
      if (c.check == TheoremCheck::partial_fold) {
        entry["k"] = c.k;
      }
      bad.push_back(entry);
    }
    return {{"schema", schema_version},
            {"n", report.n},
            {"checked", report.checked},
            {"counterexamples", bad}};
  }

  json isomorphism_report(IsomorphismReport const& report) {
    return {{"schema", schema_version},
            {"n", report.n},
            {"kn_size", report.kn_size},
            {"dynamics_size", report.dynamics_size},
            {"sampled", report.sampled},
            {"inconsistent", report.inconsistent},
            {"isomorphic", report.ok()}};
  }

  json relation_report(RelationReport const& report) {
    json checks = json::array();
    for (auto const& c : report.checks) {
      checks.push_back({{"relation", to_string(c.kind)},
                        {"i", c.i},
                        {"j", c.j},
                        {"passed", c.passed}});
    }
    return {{"schema", schema_version},
            {"checks", checks},
            {"failures", report.failures()},
            {"all_passed", report.all_passed()}};
  }

  json dynamics_report(DynamicsMonoid const& monoid, WordFormat fmt) {
    json witnesses = json::array();
    for (std::size_t id = 0; id < monoid.size(); ++id) {
      witnesses.push_back(to_string(monoid.witness(id), fmt));
    }
    return {{"schema", schema_version},
            {"state_space_size", monoid.state_space_size()},
            {"size", monoid.size()},
            {"witnesses", witnesses}};
  }

  json sweep_report(SweepReport const& report, bool timings) {
    json rows = json::array();
    for (auto const& r : report.rows) {
      json row = {{"graph", graph_to_json(r.graph)},
                  {"skipped", r.skipped}};
      if (r.skipped) {
        row["skip_reason"] = r.skip_reason;
      } else {
        row["hk_size"]       = r.hk_size;
        row["dynamics_size"] = r.dynamics_size;
        row["quotient_ok"]   = r.quotient_ok;
        row["match"]         = r.match;
        if (r.search_best) {
          row["search_best"] = *r.search_best;
        }
      }
      if (timings) {
        row["runtime_ms"] = r.runtime_ms;
      }
      rows.push_back(row);
    }
    std::size_t const decided = report.matches() + report.mismatches();
    return {{"schema", schema_version},
            {"graphs", report.rows.size()},
            {"matches", report.matches()},
            {"mismatches", report.mismatches()},
            {"skips", report.skips()},
            {"match_rate", decided == 0 ? 0.0 : double(report.matches()) / double(decided)},
            {"consistent", report.consistent()},
            {"rows", rows}};
  }

}  // namespace ksds
