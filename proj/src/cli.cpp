#include "ksds/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ksds/conjecture.hpp"
#include "ksds/errors.hpp"
#include "ksds/hecke_kiselman.hpp"
#include "ksds/io.hpp"
#include "ksds/kiselman.hpp"
#include "ksds/sds.hpp"
#include "ksds/universal.hpp"
#include "ksds/word.hpp"

namespace ksds::cli {

  namespace {

    struct GlobalOptions {
      bool          json_output  = false;
      std::uint64_t seed         = 0;
      std::size_t   max_elements = Limits().max_elements;
      std::string   graph;
      std::string   format = "auto";
    };

    struct SystemSource {
      std::string system;
      std::size_t max_states = 3;
    };

    std::string join_args(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        if (!out.empty()) {
          out += ' ';
        }
        out += p;
      }
      return out;
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> parts;
      std::stringstream        in(text);
      std::string              item;
      while (std::getline(in, item, sep)) {
        parts.push_back(item);
      }
      return parts;
    }

    // --system file.json | universal:<n>, or a random system on --graph.
    UpdateSystem load_system(SystemSource const& src, GlobalOptions const& g) {
      if (!src.system.empty()) {
        if (src.system.starts_with("universal:")) {
          auto n = std::stoul(src.system.substr(10));
          return build_universal(n).system();
        }
        return system_from_json(load_json_file(src.system));
      }
      if (!g.graph.empty()) {
        return random_update_system(parse_graph_spec(g.graph), src.max_states, g.seed);
      }
      throw ParseError("give --system <file.json|universal:n> or --graph for a random system");
    }

    void add_system_options(CLI::App* cmd, SystemSource& src) {
      cmd->add_option("--system", src.system,
                      "update system JSON file, or universal:<n> for S_n^*");
      cmd->add_option("--max-states", src.max_states,
                      "state-set bound for a random system on --graph")
          ->check(CLI::PositiveNumber);
    }

    void emit(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Kiselman semigroups, Hecke-Kiselman monoids and sequential dynamical systems",
                 "ksds");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json_output, "emit a single JSON document");
    app.add_option("--seed", g.seed, "seed for randomised commands");
    app.add_option("--max-elements", g.max_elements, "bound on monoid sizes");
    app.add_option("--graph", g.graph, "graph JSON file, inline JSON, complete:<n> or edgeless:<n>");
    app.add_option("--format", g.format, "word output format")
        ->check(CLI::IsMember({"auto", "letters", "indices"}));

    std::vector<std::string> word_args;
    auto* canon = app.add_subcommand("canon", "canonical form of a word");
    canon->add_option("word", word_args, "the word")->required();

    std::string u_text, v_text;
    auto*       mult = app.add_subcommand("mult", "product of two elements of K_n");
    mult->add_option("u", u_text)->required();
    mult->add_option("v", v_text)->required();
    auto* join_cmd = app.add_subcommand("join", "join [u, v]");
    join_cmd->add_option("u", u_text)->required();
    join_cmd->add_option("v", v_text)->required();

    std::size_t n    = 0;
    bool        list = false;
    auto*       enum_kn = app.add_subcommand("enum-kn", "enumerate K_n");
    enum_kn->add_option("n", n)->required()->check(CLI::PositiveNumber);
    enum_kn->add_flag("--list", list, "print every element");

    auto* enum_hk = app.add_subcommand("enum-hk", "enumerate HK of --graph");
    enum_hk->add_flag("--list", list, "print every element");

    SystemSource src;
    std::string  schedule, initial;
    auto*        simulate = app.add_subcommand("simulate", "evolve a system state along a schedule");
    add_system_options(simulate, src);
    simulate->add_option("--schedule", schedule, "update schedule (word over the vertices)")
        ->required();
    simulate->add_option("--initial", initial,
                         "comma-separated state per vertex (default: first listed states)");

    auto* dynamics = app.add_subcommand("dynamics", "dynamics monoid of a system");
    add_system_options(dynamics, src);
    dynamics->add_flag("--list", list, "print a witness word for every element");

    auto* check_rel = app.add_subcommand("check-relations",
                                         "check the Hecke-Kiselman relations on a system");
    add_system_options(check_rel, src);

    std::optional<std::size_t> exhaustive_len, random_count;
    std::size_t                max_len = 20;
    auto* verify_thm = app.add_subcommand("verify-theorem",
                                          "check the evolution of S_n^* against canonical forms");
    verify_thm->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    auto* exh = verify_thm->add_option("--exhaustive-len", exhaustive_len,
                                       "check every word up to this length");
    auto* rnd = verify_thm->add_option("--random", random_count, "number of random words");
    verify_thm->add_option("--max-len", max_len, "maximum random word length");
    exh->excludes(rnd);

    std::size_t samples = 2000;
    auto*       verify_iso = app.add_subcommand("verify-iso", "compare D(S_n^*) with K_n");
    verify_iso->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    verify_iso->add_option("--samples", samples, "random words checked for F_u = F_v <=> Can u = Can v");

    SweepOptions sweep;
    std::string  out_path;
    bool         timings = false;
    auto*        sweep_cmd = app.add_subcommand("conjecture-sweep",
                                         "compare |D| and |HK| over all small DAGs");
    sweep_cmd->add_option("--max-vertices", sweep.max_vertices)
        ->check(CLI::Range(std::size_t{1}, max_catalog_vertices));
    sweep_cmd->add_flag("--search-on-mismatch", sweep.search_on_mismatch,
                        "try products with random systems when sizes differ");
    sweep_cmd->add_option("--out", out_path, "also write the JSON report to this file");
    sweep_cmd->add_flag("--timings", timings, "include per-graph runtimes in JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << "ksds: " << e.what() << '\n';
      return usage_error;
    }

    Limits limits;
    limits.max_elements = g.max_elements;

    try {
      WordFormat const fmt = parse_word_format(g.format);

      if (*canon) {
        Word w   = parse_word(join_args(word_args));
        Word can = canonical_form(w);
        if (g.json_output) {
          emit(out, {{"schema", schema_version},
                     {"input", to_string(w, fmt)},
                     {"canonical", to_string(can, fmt)},
                     {"input_is_canonical", w == can}});
        } else {
          out << to_string(can, fmt) << '\n';
        }
      } else if (*mult || *join_cmd) {
        Word u = parse_word(u_text), v = parse_word(v_text);
        Word r = *mult ? kn_multiply(u, v) : join(u, v);
        if (g.json_output) {
          emit(out, {{"schema", schema_version},
                     {"u", to_string(u, fmt)},
                     {"v", to_string(v, fmt)},
                     {"result", to_string(r, fmt)}});
        } else {
          out << to_string(r, fmt) << '\n';
        }
      } else if (*enum_kn) {
        KnMonoid kn(n);
        if (g.json_output) {
          emit(out, kn_report(kn, fmt, true));
        } else if (list) {
          for (auto const& w : kn.words()) {
            out << to_string(w, fmt) << '\n';
          }
        } else {
          out << kn.size() << '\n';
        }
      } else if (*enum_hk) {
        if (g.graph.empty()) {
          throw ParseError("enum-hk needs --graph");
        }
        HkPresentation pres(parse_graph_spec(g.graph));
        HkClasses      classes = enumerate_hk(pres);
        if (g.json_output) {
          emit(out, hk_report(classes, pres, fmt, true));
        } else if (list) {
          for (auto const& w : classes.representatives) {
            out << to_string(pres.to_external(w), fmt) << '\n';
          }
        } else {
          out << classes.size() << '\n';
        }
      } else if (*simulate) {
        UpdateSystem sys = load_system(src, g);
        SystemState  s   = sys.first_state();
        if (!initial.empty()) {
          auto names = split(initial, ',');
          if (names.size() != sys.n()) {
            throw ParseError("--initial needs one state per vertex");
          }
          for (Vertex v = 1; v <= sys.n(); ++v) {
            s.values[v - 1] = sys.state_index(v, names[v - 1]);
          }
        }
        Word        w   = parse_word(schedule);
        SystemState end = evolve(sys, w, s);
        if (g.json_output) {
          json init = json::array(), fin = json::array();
          for (Vertex v = 1; v <= sys.n(); ++v) {
            init.push_back(sys.state_name(v, s[v]));
            fin.push_back(sys.state_name(v, end[v]));
          }
          emit(out, {{"schema", schema_version},
                     {"schedule", to_string(w, fmt)},
                     {"initial", init},
                     {"final", fin}});
        } else {
          out << sys.render(end) << '\n';
        }
      } else if (*dynamics) {
        UpdateSystem   sys = load_system(src, g);
        DynamicsMonoid monoid(sys, limits);
        if (g.json_output) {
          emit(out, dynamics_report(monoid, fmt));
        } else {
          out << monoid.size() << '\n';
          if (list) {
            for (std::size_t id = 0; id < monoid.size(); ++id) {
              out << to_string(monoid.witness(id), fmt) << '\n';
            }
          }
        }
      } else if (*check_rel) {
        UpdateSystem sys    = load_system(src, g);
        auto         report = check_hk_relations(sys, limits);
        if (g.json_output) {
          emit(out, relation_report(report));
        } else {
          for (auto const& c : report.checks) {
            out << to_string(c.kind) << ' ' << c.i;
            if (c.kind != RelationKind::idempotent) {
              out << ' ' << c.j;
            }
            out << (c.passed ? " pass" : " FAIL") << '\n';
          }
        }
        return report.all_passed() ? success : counterexample;
      } else if (*verify_thm) {
        auto          sys = build_universal(n);
        TheoremReport report;
        if (random_count) {
          report = verify_theorem_random(sys, *random_count, max_len, g.seed);
        } else {
          report = verify_theorem_exhaustive(sys, exhaustive_len.value_or(6));
        }
        if (g.json_output) {
          emit(out, theorem_report(report, fmt));
        } else {
          out << "n=" << report.n << " checked=" << report.checked
              << " counterexamples=" << report.counterexamples.size() << '\n';
          for (auto const& c : report.counterexamples) {
            out << "  " << to_string(c.word, fmt) << ' ' << to_string(c.check) << '\n';
          }
        }
        return report.ok() ? success : counterexample;
      } else if (*verify_iso) {
        auto report = verify_isomorphism(n, samples, g.seed, limits);
        if (g.json_output) {
          emit(out, isomorphism_report(report));
        } else {
          out << "n=" << report.n << " kn_size=" << report.kn_size
              << " dynamics_size=" << report.dynamics_size
              << " inconsistent=" << report.inconsistent
              << (report.ok() ? " isomorphic" : " NOT isomorphic") << '\n';
        }
        return report.ok() ? success : counterexample;
      } else if (*sweep_cmd) {
        sweep.seed                = g.seed;
        sweep.limits              = limits;
        SweepReport report        = conjecture_sweep(sweep);
        json        j             = sweep_report(report, timings);
        if (!out_path.empty()) {
          std::ofstream file(out_path);
          if (!file) {
            throw ParseError("cannot write " + out_path);
          }
          file << j.dump(2) << '\n';
        }
        if (g.json_output) {
          emit(out, j);
        } else {
          for (auto const& r : report.rows) {
            out << graph_to_json(r.graph).dump() << ' ';
            if (r.skipped) {
              out << "skipped: " << r.skip_reason << '\n';
              continue;
            }
            out << "hk=" << r.hk_size << " dynamics=" << r.dynamics_size
                << (r.quotient_ok ? " quotient_ok" : " QUOTIENT_FAIL")
                << (r.match ? " match" : " mismatch");
            if (r.search_best) {
              out << " search_best=" << *r.search_best;
            }
            out << '\n';
          }
          out << "matches=" << report.matches() << " mismatches=" << report.mismatches()
              << " skips=" << report.skips() << '\n';
        }
        return report.consistent() ? success : counterexample;
      }
    } catch (GuardExceeded const& e) {
      err << "ksds: " << e.what() << '\n';
      return guard_exceeded;
    } catch (ParseError const& e) {
      err << "ksds: " << e.what() << '\n';
      return usage_error;
    } catch (InvalidArgument const& e) {
      err << "ksds: " << e.what() << '\n';
      return usage_error;
    } catch (Error const& e) {
      err << "ksds: " << e.what() << '\n';
      return counterexample;
    } catch (std::logic_error const& e) {
      // std::stoul and friends
      err << "ksds: " << e.what() << '\n';
      return usage_error;
    }
    return success;
  }

}  // namespace ksds::cli
