#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. run() is the whole program minus main(), so
 * tests can drive it in-process.
 *
 * Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage error.
 */

#include <cstdlib>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieclass/classifier/classifier.hpp"
#include "lieclass/cone.hpp"
#include "lieclass/representations.hpp"

#ifndef LIECLASS_DEFAULT_DB
#define LIECLASS_DEFAULT_DB "data/classification.db"
#endif

namespace lieclass::cli {

inline constexpr const char* kDbEnvVar = "LIECLASS_DB";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::ordered_json;

inline ordered_json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline std::vector<std::int64_t> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw UsageError(flag + ": expected a comma-separated list of integers");
  for (const auto& part : lieclass::detail::split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

inline DynkinType parse_type(const std::string& text, const Limits& limits, std::ostream& err) {
  auto t = parse_dynkin(text);
  if (!t) throw UsageError("<type>: '" + text + "' is not a Dynkin type like A3, D4 or G2");
  validate(*t, limits);
  if (auto w = alias_warning(*t)) err << "warning: " << *w << "\n";
  return *t;
}

inline std::vector<int> parse_nodes(const std::string& flag, const std::string& text, const DynkinType& t) {
  std::vector<int> nodes;
  if (text.empty()) return nodes;  // rejected downstream as EmptyMarking
  for (auto v : parse_int_list(flag, text)) {
    if (v < 1 || v > t.rank)
      throw UsageError(flag + ": node " + std::to_string(v) + " out of range 1.." + std::to_string(t.rank) + " for " +
                       t.to_string());
    nodes.push_back(static_cast<int>(v));
  }
  return nodes;
}

inline DominantWeight parse_weight(const std::string& flag, const std::string& text, const DynkinType& t) {
  return DominantWeight::make(t, parse_int_list(flag, text));
}

inline std::string list_string(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

template <typename Int>
std::string coords_string(const std::vector<Int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

inline ordered_json orbit_json(const Orbit& o) {
  ordered_json j;
  j["kind"] = to_string(o.kind);
  j["dim"] = o.dim;
  j["label"] = o.label;
  j["nodes"] = o.nodes;
  j["family_over_curve"] = o.family_over_curve;
  return j;
}

inline std::string orbits_text(const std::vector<Orbit>& orbits) {
  std::string s = "[";
  for (std::size_t i = 0; i < orbits.size(); ++i) s += (i ? "; " : "") + orbits[i].to_string();
  return s + "]";
}

inline std::string variety_line(const ClassifiedVariety& v) {
  std::string s = to_string(v.source);
  if (v.item) s += " item=" + std::to_string(v.item);
  s += " " + v.name;
  if (!v.aka.empty()) s += " aka=" + v.aka;
  s += " dim=" + std::to_string(v.dim);
  if (v.picard) s += " picard=" + std::to_string(*v.picard);
  if (!v.params.empty()) s += " params=" + lieclass::detail::format_params(v.params);
  if (!v.require.empty()) s += " require=" + v.require;
  s += " orbits=" + orbits_text(v.orbits);
  if (!v.flags.empty()) s += " flags=" + lieclass::detail::join(v.flags, ',');
  if (v.actions != 1) s += " actions=" + std::to_string(v.actions) + " (" + v.actions_note + ")";
  if (!v.note.empty()) s += " note=\"" + v.note + "\"";
  return s;
}

inline ordered_json variety_json(const ClassifiedVariety& v) {
  ordered_json j;
  j["name"] = v.name;
  if (!v.aka.empty()) j["aka"] = v.aka;
  j["source"] = to_string(v.source);
  j["item"] = v.item;
  j["dim"] = v.dim;
  if (v.picard) j["picard"] = *v.picard;
  if (!v.params.empty()) j["params"] = lieclass::detail::format_params(v.params);
  if (!v.require.empty()) j["require"] = v.require;
  j["orbits"] = ordered_json::array();
  for (const auto& o : v.orbits) j["orbits"].push_back(orbit_json(o));
  j["flags"] = v.flags;
  j["actions"] = v.actions;
  if (!v.actions_note.empty()) j["actions_note"] = v.actions_note;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline std::map<std::string, std::string> parse_kv(const std::string& flag, const std::string& text) {
  std::map<std::string, std::string> out;
  if (text.empty()) return out;
  for (const auto& part : lieclass::detail::split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(flag + ": expected key=value, got '" + part + "'");
    out[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return out;
}

}  // namespace detail

/// Runs one invocation. argv excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  using detail::ordered_json;
  CLI::App app{"Lie-theoretic invariants and classification of simple-group actions", "lieclass"};
  app.require_subcommand(1);
  bool json = false;
  std::string db_path;
  int max_rank = Limits{}.max_classical_rank;
  app.add_flag("--json", json, "Emit one JSON document instead of text");
  app.add_option("--db", db_path, "Classification database (overrides $LIECLASS_DB)");
  app.add_option("--max-rank", max_rank, "Rank cap for the classical series")->check(CLI::PositiveNumber);

  std::string type_text, nodes_text, weight_text, c1_text, params_text, variety, group_text, values_text;
  int node = 0;
  std::int64_t power = 0, kmax = 0, param = 0, dim = 0;
  bool quasi = false;

  auto* roots = app.add_subcommand("roots", "Positive roots over the simple roots");
  roots->add_option("type", type_text)->required();
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix (Bourbaki numbering)");
  cartan->add_option("type", type_text)->required();
  auto* dim_group = app.add_subcommand("dim-group", "Dimension of the group");
  dim_group->add_option("type", type_text)->required();
  auto* parabolic = app.add_subcommand("parabolic", "Dimension and Picard rank of G/P");
  parabolic->add_option("type", type_text)->required();
  parabolic->add_option("--nodes", nodes_text, "Marked nodes, e.g. 1,3")->required();
  auto* rmin = app.add_subcommand("rmin", "Minimal codimension of a parabolic subgroup");
  rmin->add_option("type", type_text)->required();
  auto* minhom = app.add_subcommand("minimal-homogeneous", "Minimal homogeneous varieties");
  minhom->add_option("type", type_text)->required();
  auto* fano = app.add_subcommand("fano-index", "Fano index of G/P_i and the admissible conormal range");
  fano->add_option("type", type_text)->required();
  fano->add_option("--node", node, "Marked node")->required();
  auto* character = app.add_subcommand("character", "Character of P as a weight on the marked nodes");
  character->add_option("type", type_text)->required();
  character->add_option("--nodes", nodes_text)->required();
  character->add_option("--values", values_text, "One integer per marked node")->required();
  auto* weyl = app.add_subcommand("weyl-dim", "Dimension of the irreducible representation");
  weyl->add_option("type", type_text)->required();
  weyl->add_option("--weight", weight_text, "Fundamental-weight coordinates")->required();
  auto* minirrep = app.add_subcommand("min-irrep", "Smallest nontrivial irreducible representation");
  minirrep->add_option("type", type_text)->required();
  auto* bwb = app.add_subcommand("bwb", "dim H^0(G/P, L^k)");
  bwb->add_option("type", type_text)->required();
  bwb->add_option("--nodes", nodes_text)->required();
  bwb->add_option("--weight", weight_text)->required();
  bwb->add_option("--power", power)->required();
  auto* cover = app.add_subcommand("cone-cover", "Order of pi_1 of the punctured line bundle");
  cover->add_option("--c1", c1_text, "c1(L) coordinates")->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the cone ring");
  hilbert->add_option("type", type_text)->required();
  hilbert->add_option("--nodes", nodes_text)->required();
  hilbert->add_option("--weight", weight_text)->required();
  hilbert->add_option("--kmax", kmax)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify n-folds with a non-trivial action");
  classify_cmd->add_option("--group", group_text, "SL, Sp, Spin or G2")->required();
  classify_cmd->add_option("--param", param, "m for SL(m)/Spin(m), 2s for Sp(2s)");
  classify_cmd->add_option("--dim", dim, "Manifold dimension n")->required();
  classify_cmd->add_flag("--quasihomogeneous", quasi, "Only actions with an open orbit");
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit decomposition of a database variety");
  orbits_cmd->add_option("--variety", variety)->required();
  orbits_cmd->add_option("--params", params_text, "e.g. n=4,m=2,group=SL");
  auto* relations_cmd = app.add_subcommand("relations", "Blow-up / blow-down edges of a variety");
  relations_cmd->add_option("--variety", variety)->required();
  auto* validate_cmd = app.add_subcommand("validate-db", "Check the database against its structural rules");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Limits limits{max_rank};
  auto load_db = [&]() {
    std::string path = db_path;
    if (path.empty())
      if (const char* env = std::getenv(kDbEnvVar)) path = env;
    if (path.empty()) path = LIECLASS_DEFAULT_DB;
    return load_database(path);
  };
  auto emit = [&](const ordered_json& j) { out << j.dump(2) << "\n"; };

  try {
    if (*roots) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto rs = positive_roots(t, limits);
      if (json) {
        ordered_json j{{"type", t.to_string()}, {"count", rs.size()}, {"roots", ordered_json::array()}};
        for (const auto& r : rs) j["roots"].push_back(r.coeffs);
        emit(j);
      } else {
        out << "type=" << t.to_string() << " count=" << rs.size() << "\n";
        for (const auto& r : rs) out << detail::coords_string(r.coeffs) << "\n";
      }
    } else if (*cartan) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto a = cartan_matrix(t, limits);
      if (json) {
        emit(ordered_json{{"type", t.to_string()}, {"cartan", a}});
      } else {
        for (const auto& row : a) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << "\n";
        }
      }
    } else if (*dim_group) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto d = group_dimension(t, limits);
      if (json) emit(ordered_json{{"type", t.to_string()}, {"dim", d}});
      else out << d << "\n";
    } else if (*parabolic) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = ParabolicMarking::make(t, detail::parse_nodes("--nodes", nodes_text, t));
      const auto h = homogeneous_variety(RootSystem(t, limits), m);
      if (json) {
        emit(ordered_json{{"type", t.to_string()},
                          {"nodes", m.marked()},
                          {"dim", h.dim},
                          {"picard", h.picard_rank},
                          {"identification", h.identification.name()}});
      } else {
        out << "dim=" << h.dim << " picard=" << h.picard_rank << " identification=" << h.identification.name() << "\n";
      }
    } else if (*rmin) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto r = r_min(t, limits);
      if (json) emit(ordered_json{{"type", t.to_string()}, {"r", r.r}, {"nodes", r.nodes}});
      else out << "r=" << r.r << " nodes=" << detail::list_string(r.nodes) << "\n";
    } else if (*minhom) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto vs = minimal_homogeneous_varieties(t, limits);
      if (json) {
        ordered_json j{{"type", t.to_string()}, {"varieties", ordered_json::array()}};
        for (const auto& h : vs)
          j["varieties"].push_back(ordered_json{{"nodes", h.marking.marked()},
                                                {"dim", h.dim},
                                                {"picard", h.picard_rank},
                                                {"identification", h.identification.name()}});
        emit(j);
      } else {
        for (const auto& h : vs)
          out << "nodes=" << detail::list_string(h.marking.marked()) << " dim=" << h.dim << " picard=" << h.picard_rank
              << " " << h.identification.name() << "\n";
      }
    } else if (*fano) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = ParabolicMarking::make(t, detail::parse_nodes("--node", std::to_string(node), t));
      const RootSystem rs(t, limits);
      const auto idx = fano_index(rs, m);
      const auto range = admissible_conormal_range(rs, m);
      if (json) {
        emit(ordered_json{{"type", t.to_string()}, {"node", node}, {"index", idx}, {"conormal", {range.lo, range.hi}}});
      } else {
        out << "index=" << idx << " conormal=[" << range.lo << "," << range.hi << "]\n";
      }
    } else if (*character) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = ParabolicMarking::make(t, detail::parse_nodes("--nodes", nodes_text, t));
      const auto values = detail::parse_int_list("--values", values_text);
      const auto cw = character_weight(m, values);
      if (json) emit(ordered_json{{"type", t.to_string()}, {"weight", cw.coords}, {"dominant", cw.dominant}});
      else out << "weight=" << detail::coords_string(cw.coords) << " dominant=" << (cw.dominant ? "true" : "false") << "\n";
    } else if (*weyl) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto w = detail::parse_weight("--weight", weight_text, t);
      const auto d = weyl_dim(w, limits);
      if (json) emit(ordered_json{{"type", t.to_string()}, {"weight", w.coords()}, {"dim", detail::big_json(d)}});
      else out << d << "\n";
    } else if (*minirrep) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = min_nontrivial_irrep(t, limits);
      if (json) {
        emit(ordered_json{{"type", t.to_string()},
                          {"dim", detail::big_json(m.dim)},
                          {"weight", m.weight.coords()},
                          {"nodes", m.nodes}});
      } else {
        out << "dim=" << m.dim << " weight=" << m.weight.to_string() << " nodes=" << detail::list_string(m.nodes) << "\n";
      }
    } else if (*bwb) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = ParabolicMarking::make(t, detail::parse_nodes("--nodes", nodes_text, t));
      const auto w = detail::parse_weight("--weight", weight_text, t);
      if (power < 1) throw UsageError("--power: must be >= 1");
      const auto d = bwb_section_dim(m, w, power, limits);
      if (json) emit(ordered_json{{"type", t.to_string()}, {"power", power}, {"dim", detail::big_json(d)}});
      else out << d << "\n";
    } else if (*cover) {
      std::vector<BigInt> c;
      for (auto v : detail::parse_int_list("--c1", c1_text)) c.emplace_back(v);
      const auto r = cone_cover_order(ChernVector::make(std::move(c)));
      if (json) emit(ordered_json{{"c1", detail::parse_int_list("--c1", c1_text)}, {"order", detail::big_json(r)}});
      else out << r << "\n";
    } else if (*hilbert) {
      const auto t = detail::parse_type(type_text, limits, err);
      const auto m = ParabolicMarking::make(t, detail::parse_nodes("--nodes", nodes_text, t));
      const auto w = detail::parse_weight("--weight", weight_text, t);
      if (kmax < 1) throw UsageError("--kmax: must be >= 1");
      const auto h = cone_hilbert_function(m, w, kmax, limits);
      if (json) {
        ordered_json j{{"type", t.to_string()}, {"kmax", kmax}, {"values", ordered_json::array()}};
        for (const auto& v : h) j["values"].push_back(detail::big_json(v));
        emit(j);
      } else {
        for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << h[i];
        out << "\n";
      }
    } else if (*classify_cmd) {
      const auto fam = parse_family(group_text);
      if (!fam) throw UsageError("--group: expected SL, Sp, Spin or G2, got '" + group_text + "'");
      if (*fam != Family::G2 && classify_cmd->count("--param") == 0)
        throw UsageError("--param: required for " + group_text);
      const auto g = GroupSpec::make(*fam, param, limits);
      const auto db = load_db();
      const auto res = classify(db, g, dim, quasi, limits);
      if (json) {
        ordered_json j{{"verdict", to_string(res.verdict)},
                       {"group", res.group.to_string()},
                       {"type", res.type.to_string()},
                       {"r", res.r},
                       {"n", res.n},
                       {"varieties", ordered_json::array()}};
        for (const auto& v : res.varieties) j["varieties"].push_back(detail::variety_json(v));
        if (!res.reason.empty()) j["reason"] = res.reason;
        emit(j);
      } else {
        out << "verdict=" << to_string(res.verdict) << " group=" << res.group.to_string()
            << " type=" << res.type.to_string() << " r=" << res.r << " n=" << res.n << "\n";
        for (const auto& v : res.varieties) out << detail::variety_line(v) << "\n";
        if (!res.reason.empty()) out << "reason: " << res.reason << "\n";
      }
    } else if (*orbits_cmd) {
      OrbitQuery q;
      for (const auto& [k, v] : detail::parse_kv("--params", params_text)) {
        if (k == "group") {
          static const std::regex with_param(R"(([A-Za-z0-9]+)\(([0-9]+)\))");
          std::smatch mt;
          if (std::regex_match(v, mt, with_param)) {
            q.group = parse_family(mt[1].str());
            q.group_param = std::stoll(mt[2].str());
          } else {
            q.group = parse_family(v);
          }
          if (!q.group) throw UsageError("--params: unknown group '" + v + "'");
          continue;
        }
        const auto xs = detail::parse_int_list("--params", v);
        if (xs.size() != 1) throw UsageError("--params: " + k + " takes one integer");
        q.params[k] = xs.front();
      }
      const auto db = load_db();
      const auto os = orbit_structure(db, variety, q, limits);
      if (json) {
        ordered_json j{{"variety", variety}, {"orbits", ordered_json::array()}};
        for (const auto& o : os) j["orbits"].push_back(detail::orbit_json(o));
        emit(j);
      } else {
        for (const auto& o : os) out << o.to_string() << "\n";
      }
    } else if (*relations_cmd) {
      const auto db = load_db();
      const auto rel = relations(db, variety);
      if (json) {
        ordered_json j{{"variety", variety}, {"relations", ordered_json::array()}};
        for (const auto& r : rel) j["relations"].push_back(ordered_json{{"op", r.op}, {"target", r.target}, {"center", r.center}});
        emit(j);
      } else {
        for (const auto& r : rel) out << r.op << " " << r.target << " (" << r.center << ")\n";
      }
    } else if (*validate_cmd) {
      const auto db = load_db();
      const auto vs = validate_database(db, limits);
      if (json) {
        ordered_json j{{"violations", ordered_json::array()}};
        for (const auto& v : vs) j["violations"].push_back(ordered_json{{"rule", v.rule}, {"record", v.record_id}, {"message", v.message}});
        emit(j);
      } else if (vs.empty()) {
        out << "ok\n";
      } else {
        for (const auto& v : vs) out << v.rule << " " << v.record_id << ": " << v.message << "\n";
      }
      return vs.empty() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lieclass::cli
