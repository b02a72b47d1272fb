#pragma once

/**
 * @file classifier.hpp
 * @brief Queries over the classification database.
 *
 * For a group G with minimal parabolic codimension r and a manifold dimension n:
 *   n <  r       only the trivial action
 *   n == r       the minimal homogeneous varieties
 *   n == r + 1   the Thm4.1 list for SL, Sp, Spin
 *   n == r + 2   the Thm5.4 list, for quasihomogeneous SL(3)-fourfolds only
 * Everything else is reported as outside the covered range.
 */

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <tuple>
#include <vector>

#include "lieclass/classifier/database.hpp"
#include "lieclass/parabolic.hpp"

namespace lieclass {

/// An orbit with every expression evaluated.
struct Orbit {
  OrbitKind kind = OrbitKind::Open;
  std::int64_t dim = 0;
  std::string label;
  std::vector<int> nodes;
  bool family_over_curve = false;

  bool operator==(const Orbit&) const = default;

  std::string to_string() const {
    std::string s = lieclass::to_string(kind) + " " + std::to_string(dim);
    if (!label.empty()) s += " " + label;
    if (!nodes.empty()) s += " [" + detail::join_nodes(nodes) + "]";
    if (family_over_curve) s += " (family over R)";
    return s;
  }
};

inline void sort_orbits(std::vector<Orbit>& orbits) {
  std::stable_sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return static_cast<int>(a.kind) > static_cast<int>(b.kind);
  });
}

/// One entry of a classification list: a schema bound to a group and dimension.
struct ClassifiedVariety {
  std::string name;
  std::string aka;
  Source source = Source::Thm41;
  int item = 0;
  std::string record_id;
  std::int64_t dim = 0;
  std::optional<int> picard;
  std::vector<ParamSlot> params;
  std::string require;
  std::vector<Orbit> orbits;
  std::vector<std::string> flags;
  int actions = 1;
  std::string actions_note;
  std::string note;

  bool has_open_orbit() const {
    return std::any_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.kind == OrbitKind::Open; });
  }
};

struct ClassificationResult {
  enum class Verdict { OnlyTrivialAction, Homogeneous, FullList, OutOfCoveredRange };

  Verdict verdict = Verdict::OutOfCoveredRange;
  GroupSpec group = GroupSpec::make(Family::SL, 2);
  DynkinType type;
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::vector<ClassifiedVariety> varieties;
  std::string reason;
};

inline std::string to_string(ClassificationResult::Verdict v) {
  using V = ClassificationResult::Verdict;
  switch (v) {
    case V::OnlyTrivialAction: return "OnlyTrivialAction";
    case V::Homogeneous: return "Homogeneous";
    case V::FullList: return "FullList";
    case V::OutOfCoveredRange: return "OutOfCoveredRange";
  }
  return "?";
}

/// The acting group of a record at manifold dimension n, if the record applies there.
inline std::optional<GroupSpec> acting_group(const DescriptorRecord& rec, std::int64_t n, const Limits& limits = {}) {
  if (rec.only_n && *rec.only_n != n) return std::nullopt;
  if (rec.n_min && n < *rec.n_min) return std::nullopt;
  const auto p = rec.group_param.eval({{"n", n}});
  if (!p) return std::nullopt;
  try {
    return GroupSpec::make(rec.family, *p, limits);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::vector<Orbit> instantiate_orbits(const DescriptorRecord& rec, std::int64_t n) {
  const AffineExpr::Env env{{"n", n}};
  std::vector<Orbit> out;
  for (const auto& o : rec.orbits) {
    const auto d = o.dim.eval(env);
    if (!d) throw Error(errors::kParameterViolation, "orbit dimension '" + o.dim.text() + "' does not evaluate");
    out.push_back(Orbit{o.kind, *d, render_label(o.label, env), o.nodes, o.family_over_curve});
  }
  sort_orbits(out);
  return out;
}

inline ClassifiedVariety instantiate(const DescriptorRecord& rec, std::int64_t n) {
  ClassifiedVariety v;
  v.name = rec.name;
  v.aka = rec.aka;
  v.source = rec.source;
  v.item = rec.item;
  v.record_id = rec.id;
  const auto d = rec.dim.eval({{"n", n}});
  if (!d) throw Error(errors::kParameterViolation, "dimension '" + rec.dim.text() + "' does not evaluate");
  v.dim = *d;
  v.picard = rec.picard;
  v.params = rec.params;
  v.require = rec.require;
  v.orbits = instantiate_orbits(rec, n);
  v.flags = rec.flags;
  v.actions = rec.actions;
  v.actions_note = rec.actions_note;
  v.note = rec.note;
  return v;
}

namespace detail {

inline void sort_varieties(std::vector<ClassifiedVariety>& vs) {
  std::sort(vs.begin(), vs.end(), [](const ClassifiedVariety& a, const ClassifiedVariety& b) {
    return std::tie(a.source, a.item, a.name) < std::tie(b.source, b.item, b.name);
  });
}

inline ClassifiedVariety from_homogeneous(const HomogeneousVariety& h) {
  ClassifiedVariety v;
  const auto ident = h.identification.name();
  v.name = h.identification.kind == Identification::Kind::Other
               ? h.marking.type().to_string() + "/P" + h.marking.nodes_string()
               : ident;
  v.source = Source::Prop31;
  v.dim = h.dim;
  v.picard = h.picard_rank;
  v.orbits.push_back(Orbit{OrbitKind::Open, h.dim, v.name, h.marking.marked(), false});
  v.flags = {"homogeneous"};
  return v;
}

}  // namespace detail

inline ClassificationResult classify(const Database& db, const GroupSpec& group, std::int64_t n,
                                     bool quasihomogeneous_only, const Limits& limits = {}) {
  if (n <= 0) throw Error(errors::kInvalidDimension, "manifold dimension must be positive, got " + std::to_string(n));
  ClassificationResult res;
  res.group = group;
  res.type = group.dynkin();
  res.n = n;
  const RootSystem rs(res.type, limits);
  res.r = r_min(rs).r;
  using V = ClassificationResult::Verdict;

  if (n < res.r) {
    res.verdict = V::OnlyTrivialAction;
    return res;
  }
  if (n == res.r) {
    res.verdict = V::Homogeneous;
    for (const auto& h : minimal_homogeneous_varieties(rs)) res.varieties.push_back(detail::from_homogeneous(h));
    detail::sort_varieties(res.varieties);
    return res;
  }

  const auto canon = group.canonical();
  std::optional<Source> source;
  if (n == res.r + 1) {
    if (canon.family() == Family::G2) {
      res.verdict = V::OutOfCoveredRange;
      res.reason = "n = r+1 is covered for SL, Sp and Spin only; exceptional groups are not classified";
      return res;
    }
    source = Source::Thm41;
  } else if (n == res.r + 2 && canon == GroupSpec::make(Family::SL, 3)) {
    if (!quasihomogeneous_only) {
      res.verdict = V::OutOfCoveredRange;
      res.reason = "n = r+2 for SL(3) is covered only for actions with an open orbit (pass quasihomogeneous)";
      return res;
    }
    source = Source::Thm54;
  } else {
    res.verdict = V::OutOfCoveredRange;
    res.reason = "n = " + std::to_string(n) + " with r = " + std::to_string(res.r) + " for " + group.to_string() +
                 " is beyond the classified range";
    return res;
  }

  for (const auto& rec : db.descriptors) {
    if (rec.source != *source) continue;
    const auto g = acting_group(rec, n, limits);
    if (!g || !(g->canonical() == canon)) continue;
    auto v = instantiate(rec, n);
    if (quasihomogeneous_only && !v.has_open_orbit()) continue;
    res.varieties.push_back(std::move(v));
  }
  detail::sort_varieties(res.varieties);
  res.verdict = V::FullList;
  return res;
}

// ---------------------------------------------------------------------------
// orbit_structure

struct OrbitQuery {
  std::optional<Family> group;
  std::optional<std::int64_t> group_param;  // the m in SL(m), Sp(m), Spin(m)
  std::map<std::string, std::int64_t, std::less<>> params;  // n plus schema parameters
};

namespace detail {

/// Matches an instance name such as "Y_{(-1)}" against a pattern "Y_{(a)}" and
/// returns the captured parameter values.
inline std::optional<std::map<std::string, std::int64_t, std::less<>>> match_pattern(const DescriptorRecord& rec,
                                                                                      const std::string& name) {
  if (rec.pattern.empty()) return std::nullopt;
  std::string rx;
  std::vector<std::string> order;
  std::size_t i = 0;
  const auto& p = rec.pattern;
  auto is_param = [&](const std::string& tok) {
    return std::any_of(rec.params.begin(), rec.params.end(), [&](const ParamSlot& s) { return s.name == tok; });
  };
  while (i < p.size()) {
    if (std::isalpha(static_cast<unsigned char>(p[i]))) {
      std::string tok;
      while (i < p.size() && std::isalnum(static_cast<unsigned char>(p[i]))) tok += p[i++];
      if (is_param(tok)) {
        rx += "(-?[0-9]+)";
        order.push_back(tok);
      } else {
        rx += tok;
      }
    } else {
      if (std::string("\\^$.|?*+()[]{}").find(p[i]) != std::string::npos) rx += '\\';
      rx += p[i++];
    }
  }
  std::smatch m;
  if (!std::regex_match(name, m, std::regex(rx))) return std::nullopt;
  std::map<std::string, std::int64_t, std::less<>> out;
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = std::stoll(m[k + 1].str());
  return out;
}

inline void check_params(const DescriptorRecord& rec, const std::map<std::string, std::int64_t, std::less<>>& params) {
  for (const auto& [key, value] : params) {
    if (key == "n") continue;
    const bool declared =
        std::any_of(rec.params.begin(), rec.params.end(), [&](const ParamSlot& s) { return s.name == key; });
    if (!declared) throw Error(errors::kParameterViolation, rec.name + " has no parameter '" + key + "'");
  }
  for (const auto& slot : rec.params) {
    auto it = params.find(slot.name);
    if (it == params.end()) throw Error(errors::kParameterViolation, rec.name + " needs parameter " + slot.name);
    if (slot.min && it->second < *slot.min)
      throw Error(errors::kParameterViolation, rec.name + " requires " + slot.name + " >= " + std::to_string(*slot.min) +
                                                   ", got " + std::to_string(it->second));
  }
  if (rec.require.starts_with("nonzero(") && rec.require.ends_with(")")) {
    const auto inner = rec.require.substr(8, rec.require.size() - 9);
    bool any = false;
    for (const auto& name : split(inner, ',')) {
      auto it = params.find(name);
      if (it != params.end() && it->second != 0) any = true;
    }
    if (!any) throw Error(errors::kParameterViolation, rec.name + " requires " + rec.require);
  }
}

}  // namespace detail

/// Orbit decomposition of a named variety. When several records share the name
/// (e.g. P^n under SL, Sp and Spin) they must agree or the query must name the group.
inline std::vector<Orbit> orbit_structure(const Database& db, const std::string& name, const OrbitQuery& query,
                                          const Limits& limits = {}) {
  std::vector<std::pair<const DescriptorRecord*, std::map<std::string, std::int64_t, std::less<>>>> named;
  for (const auto& rec : db.descriptors) {
    if (rec.name == name || (!rec.aka.empty() && rec.aka == name)) {
      named.emplace_back(&rec, query.params);
    } else if (auto captured = detail::match_pattern(rec, name)) {
      auto params = query.params;
      for (const auto& [k, v] : *captured) params[k] = v;
      named.emplace_back(&rec, std::move(params));
    }
  }
  if (named.empty()) throw Error(errors::kUnknownVariety, "no variety named '" + name + "'");

  std::vector<std::vector<Orbit>> results;
  std::string last_problem;
  for (const auto& [rec, params] : named) {
    if (query.group && rec->family != *query.group) continue;
    std::int64_t n = 0;
    if (auto it = params.find("n"); it != params.end()) {
      n = it->second;
    } else if (rec->only_n) {
      n = *rec->only_n;
    } else {
      last_problem = name + " needs the dimension parameter n";
      continue;
    }
    const auto g = acting_group(*rec, n, limits);
    if (!g) {
      last_problem = name + " (" + rec->id + ") does not occur at n = " + std::to_string(n);
      continue;
    }
    if (query.group_param && g->param() != *query.group_param) {
      last_problem = name + " (" + rec->id + ") is acted on by " + g->to_string();
      continue;
    }
    detail::check_params(*rec, params);
    auto orbits = instantiate_orbits(*rec, n);
    if (std::find(results.begin(), results.end(), orbits) == results.end()) results.push_back(std::move(orbits));
  }
  if (results.empty()) throw Error(errors::kParameterViolation, last_problem.empty() ? "no record for the requested group" : last_problem);
  if (results.size() > 1)
    throw Error(errors::kParameterViolation, name + " has different orbit structures under different groups; specify group=NAME(m)");
  return results.front();
}

// ---------------------------------------------------------------------------
// relations

struct Relation {
  std::string op;
  std::string target;
  std::string center;
  bool operator==(const Relation&) const = default;
};

inline bool is_thm54_name(const Database& db, const std::string& name) {
  for (const auto& rec : db.descriptors) {
    if (rec.source != Source::Thm54) continue;
    if (rec.name == name || rec.aka == name || detail::match_pattern(rec, name)) return true;
  }
  return false;
}

/// Recorded blow-up / blow-down edges out of a variety, blow-ups first.
inline std::vector<Relation> relations(const Database& db, const std::string& name) {
  if (!is_thm54_name(db, name)) throw Error(errors::kUnknownVariety, "no quasihomogeneous SL(3)-fourfold named '" + name + "'");
  std::vector<Relation> out;
  for (const auto& r : db.relations)
    if (r.from == name) out.push_back({r.op, r.to, r.center});
  std::stable_sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
    return (a.op == "blow-up") > (b.op == "blow-up");
  });
  return out;
}

// ---------------------------------------------------------------------------
// validation

struct Violation {
  std::string rule;
  std::string record_id;
  std::string message;
};

namespace detail {

/// "P^k" / "Q^k" labels carry their own dimension.
inline std::optional<std::int64_t> labelled_dimension(const std::string& label) {
  if (label.size() < 3 || (label[0] != 'P' && label[0] != 'Q') || label[1] != '^') return std::nullopt;
  std::int64_t v = 0;
  for (std::size_t i = 2; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return std::nullopt;
    v = v * 10 + (label[i] - '0');
  }
  return v;
}

inline bool has_blowup_cycle(const Database& db) {
  std::map<std::string, std::vector<std::string>> graph;
  for (const auto& r : db.relations)
    if (r.op == "blow-up") graph[r.from].push_back(r.to);
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<bool(const std::string&)> visit = [&](const std::string& v) {
    state[v] = 1;
    for (const auto& w : graph[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && visit(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (const auto& [v, _] : graph)
    if (state[v] == 0 && visit(v)) return true;
  return false;
}

}  // namespace detail

/// Dimensions at which each record is instantiated during validation.
inline std::vector<std::int64_t> validation_dimensions(const DescriptorRecord& rec) {
  if (rec.only_n) return {*rec.only_n};
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= 12; ++n) out.push_back(n);
  return out;
}

/**
 * Structural rules over every record, instantiated at every dimension it applies to:
 *   R0  orbit bookkeeping: open orbits have the ambient dimension, others are
 *       smaller, at most one open orbit, fixed points have dimension 0, and the
 *       acting group's r matches the record's source (n = r+1 or n = r+2)
 *   R1  no orbit of dimension strictly between 0 and r
 *   R2  fixed points only in records flagged fixed-point-exception, which must
 *       be P^n under SL or Sp
 *   R3  orbits carrying a marking have codim_parabolic equal to their dimension,
 *       and P^k / Q^k / named labels agree with the marking
 *   R4  every Thm5.4 record has exactly one open orbit
 *   R5  the Spin list of Thm4.1 has no Picard-rank-1 entry besides P^n and Q^n
 *   R6  no Thm5.4 record is homogeneous with Picard rank 1
 *   R7  blow-up edges are acyclic and relation endpoints are Thm5.4 varieties
 */
inline std::vector<Violation> validate_database(const Database& db, const Limits& limits = {}) {
  std::vector<Violation> out;
  auto add = [&](std::string rule, const std::string& id, std::string msg) {
    out.push_back({std::move(rule), id, std::move(msg)});
  };

  for (const auto& rec : db.descriptors) {
    bool applied = false;
    for (auto n : validation_dimensions(rec)) {
      const auto group = acting_group(rec, n, limits);
      if (!group) continue;
      applied = true;
      const RootSystem rs(group->dynkin(), limits);
      const auto r = r_min(rs).r;
      const std::string at = " at n=" + std::to_string(n) + " under " + group->to_string();

      std::vector<Orbit> orbits;
      std::int64_t dim = 0;
      try {
        orbits = instantiate_orbits(rec, n);
        dim = *rec.dim.eval({{"n", n}});
      } catch (const std::exception& e) {
        add("R0", rec.id, std::string("cannot instantiate") + at + ": " + e.what());
        continue;
      }

      const auto expected_gap = rec.source == Source::Thm41 ? 1 : 2;
      if (dim != r + expected_gap)
        add("R0", rec.id, "ambient dimension " + std::to_string(dim) + " != r+" + std::to_string(expected_gap) + at);

      int open = 0;
      for (const auto& o : orbits) {
        if (o.kind == OrbitKind::Open) {
          ++open;
          if (o.dim != dim) add("R0", rec.id, "open orbit of dimension " + std::to_string(o.dim) + at);
        } else if (o.dim >= dim) {
          add("R0", rec.id, "non-open orbit not smaller than the ambient space" + at);
        }
        if (o.kind == OrbitKind::FixedPoint && o.dim != 0) add("R0", rec.id, "fixed point with positive dimension" + at);

        if (o.dim > 0 && o.dim < r)
          add("R1", rec.id, "orbit of dimension " + std::to_string(o.dim) + " below r=" + std::to_string(r) + at);

        if (o.kind == OrbitKind::FixedPoint || o.dim == 0) {
          const bool allowed = rec.has_flag("fixed-point-exception") && rec.name == "P^n" &&
                               (rec.family == Family::SL || rec.family == Family::Sp);
          if (!allowed) add("R2", rec.id, "fixed point outside the P^n exception" + at);
        }

        if (auto k = detail::labelled_dimension(o.label); k && *k != o.dim)
          add("R3", rec.id, "orbit " + o.label + " recorded with dimension " + std::to_string(o.dim) + at);
        if (!o.nodes.empty()) {
          try {
            const auto m = ParabolicMarking::make(rs.type(), o.nodes);
            const auto c = codim_parabolic(rs, m);
            if (c != o.dim)
              add("R3", rec.id, "orbit " + o.label + " has dimension " + std::to_string(o.dim) + " but G/P" +
                                    m.nodes_string() + " has dimension " + std::to_string(c) + at);
            const auto ident = identify(m);
            if (ident.kind != Identification::Kind::Other && !o.label.empty() && ident.name() != o.label)
              add("R3", rec.id, "orbit labelled " + o.label + " but G/P" + m.nodes_string() + " is " + ident.name() + at);
          } catch (const Error& e) {
            add("R3", rec.id, std::string("bad marking: ") + e.what() + at);
          }
        }
      }
      if (open > 1) add("R0", rec.id, "more than one open orbit" + at);
      if (rec.source == Source::Thm54 && open != 1)
        add("R4", rec.id, "expected exactly one open orbit, found " + std::to_string(open) + at);
      if (rec.source == Source::Thm41 && rec.family == Family::Spin && rec.picard && *rec.picard == 1 &&
          rec.name != "P^n" && rec.name != "Q^n")
        add("R5", rec.id, "Picard rank 1 entry " + rec.name + " in the Spin list" + at);
      if (rec.source == Source::Thm54 && rec.picard && *rec.picard == 1 && orbits.size() == 1 && open == 1)
        add("R6", rec.id, "homogeneous fourfold with Picard rank 1 under SL(3)" + at);
    }
    if (!applied) add("R0", rec.id, "record applies at no dimension");
  }

  if (detail::has_blowup_cycle(db)) add("R7", "relations", "blow-up edges form a cycle");
  for (const auto& r : db.relations) {
    for (const auto* end : {&r.from, &r.to})
      if (!is_thm54_name(db, *end)) add("R7", "relations", "endpoint '" + *end + "' is not a Thm5.4 variety");
  }
  return out;
}

}  // namespace lieclass
