#pragma once

/**
 * @file database.hpp
 * @brief Line-oriented classification database: parse and serialize.
 *
 * One record per line, as space-separated key=value pairs after a record tag.
 * Values containing spaces are double-quoted; double quotes inside values are
 * not allowed. Lines starting with '#' and blank lines are kept verbatim and
 * attached to the record that follows them, so serialize(parse(text)) == text
 * for any file written in canonical key order.
 *
 *   format version=1
 *   descriptor id=... source=Thm4.1 item=1 group=SL(n) name=P^n dim=n picard=1 orbits=...
 *   relation from=Q^4 op=blow-up to=Y_{(-1)} center="P^2 orbit"
 *
 * Orbit lists are '|'-separated entries Kind:dim[:label][@nodes][~R], where the
 * nodes are a marking of the acting group's Dynkin diagram identifying the orbit
 * as G/P, and ~R marks a one-parameter family of orbits over a curve R.
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lieclass/classifier/expr.hpp"
#include "lieclass/classifier/group.hpp"
#include "lieclass/error.hpp"

namespace lieclass {

enum class Source { Prop31, Thm41, Thm54 };

inline std::string to_string(Source s) {
  switch (s) {
    case Source::Prop31: return "Prop3.1";
    case Source::Thm41: return "Thm4.1";
    case Source::Thm54: return "Thm5.4";
  }
  return "?";
}

inline std::optional<Source> parse_source(std::string_view s) {
  if (s == "Prop3.1") return Source::Prop31;
  if (s == "Thm4.1") return Source::Thm41;
  if (s == "Thm5.4") return Source::Thm54;
  return std::nullopt;
}

enum class OrbitKind { Open, Closed, Intermediate, FixedPoint };

inline std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::Open: return "Open";
    case OrbitKind::Closed: return "Closed";
    case OrbitKind::Intermediate: return "Intermediate";
    case OrbitKind::FixedPoint: return "FixedPoint";
  }
  return "?";
}

inline std::optional<OrbitKind> parse_orbit_kind(std::string_view s) {
  if (s == "Open") return OrbitKind::Open;
  if (s == "Closed") return OrbitKind::Closed;
  if (s == "Intermediate") return OrbitKind::Intermediate;
  if (s == "FixedPoint") return OrbitKind::FixedPoint;
  return std::nullopt;
}

struct OrbitSchema {
  OrbitKind kind = OrbitKind::Open;
  AffineExpr dim;
  std::string label;
  std::vector<int> nodes;
  bool family_over_curve = false;

  bool operator==(const OrbitSchema&) const = default;
};

struct ParamSlot {
  std::string name;
  std::optional<std::int64_t> min;  // inclusive lower bound, if any

  bool operator==(const ParamSlot&) const = default;
};

struct DescriptorRecord {
  std::vector<std::string> preamble;  // comment and blank lines before the record
  std::string id;
  Source source = Source::Thm41;
  int item = 0;
  Family family = Family::SL;
  AffineExpr group_param;
  std::optional<std::int64_t> only_n;
  std::optional<std::int64_t> n_min;
  std::string name;
  std::string aka;
  std::string pattern;  // instance-name pattern, e.g. "Y_{(a)}"
  AffineExpr dim;
  std::optional<int> picard;
  std::vector<ParamSlot> params;
  std::string require;  // "nonzero(p,q)" or empty
  std::vector<OrbitSchema> orbits;
  std::vector<std::string> flags;
  int actions = 1;
  std::string actions_note;
  std::string note;

  bool has_flag(std::string_view f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
  bool operator==(const DescriptorRecord&) const = default;
};

struct RelationRecord {
  std::vector<std::string> preamble;
  std::string from;
  std::string op;  // blow-up or blow-down
  std::string to;
  std::string center;

  bool operator==(const RelationRecord&) const = default;
};

struct Database {
  std::vector<std::string> header;  // lines before the format line
  int version = 1;
  std::vector<DescriptorRecord> descriptors;
  std::vector<RelationRecord> relations;
  std::vector<std::string> trailer;

  bool operator==(const Database&) const = default;
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(errors::kDatabaseParse, "line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::pair<std::string, std::string>> split_fields(std::string_view s, std::size_t line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    const auto eq = s.find('=', i);
    if (eq == std::string_view::npos) parse_fail(line, "expected key=value near '" + std::string(s.substr(i)) + "'");
    std::string key(s.substr(i, eq - i));
    if (key.empty() || key.find(' ') != std::string::npos) parse_fail(line, "bad key '" + key + "'");
    i = eq + 1;
    std::string value;
    if (i < s.size() && s[i] == '"') {
      const auto close = s.find('"', i + 1);
      if (close == std::string_view::npos) parse_fail(line, "unterminated quote for " + key);
      value = std::string(s.substr(i + 1, close - i - 1));
      i = close + 1;
      if (i < s.size() && s[i] != ' ') parse_fail(line, "garbage after quoted value of " + key);
    } else {
      const auto end = s.find(' ', i);
      value = std::string(s.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i));
      if (value.find('"') != std::string::npos) parse_fail(line, "stray quote in " + key);
      i = end == std::string_view::npos ? s.size() : end;
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

inline std::string quote(const std::string& v) {
  if (v.empty() || v.find(' ') != std::string::npos) return "\"" + v + "\"";
  return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::int64_t parse_int(const std::string& v, std::size_t line, const std::string& key) {
  try {
    std::size_t used = 0;
    const auto x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer for " + key + ", got '" + v + "'");
  }
}

inline AffineExpr parse_expr(const std::string& v, std::size_t line, const std::string& key) {
  auto e = AffineExpr::parse(v);
  if (!e) parse_fail(line, "bad expression for " + key + ": '" + v + "'");
  return *e;
}

inline std::vector<int> parse_nodes(const std::string& v, std::size_t line) {
  std::vector<int> nodes;
  for (const auto& part : split(v, ',')) nodes.push_back(static_cast<int>(parse_int(part, line, "nodes")));
  return nodes;
}

inline std::string join_nodes(const std::vector<int>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
  return s;
}

inline OrbitSchema parse_orbit(std::string entry, std::size_t line) {
  OrbitSchema o;
  if (entry.size() >= 2 && entry.ends_with("~R")) {
    o.family_over_curve = true;
    entry.resize(entry.size() - 2);
  }
  if (const auto at = entry.rfind('@'); at != std::string::npos) {
    o.nodes = parse_nodes(entry.substr(at + 1), line);
    entry.resize(at);
  }
  const auto c1 = entry.find(':');
  if (c1 == std::string::npos) parse_fail(line, "orbit entry needs Kind:dim, got '" + entry + "'");
  auto kind = parse_orbit_kind(entry.substr(0, c1));
  if (!kind) parse_fail(line, "unknown orbit kind '" + entry.substr(0, c1) + "'");
  o.kind = *kind;
  const auto c2 = entry.find(':', c1 + 1);
  o.dim = parse_expr(entry.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1), line, "orbit dim");
  if (c2 != std::string::npos) o.label = entry.substr(c2 + 1);
  return o;
}

inline std::string format_orbit(const OrbitSchema& o) {
  std::string s = to_string(o.kind) + ":" + o.dim.text();
  if (!o.label.empty()) s += ":" + o.label;
  if (!o.nodes.empty()) s += "@" + join_nodes(o.nodes);
  if (o.family_over_curve) s += "~R";
  return s;
}

inline std::vector<ParamSlot> parse_params(const std::string& v, std::size_t line) {
  std::vector<ParamSlot> out;
  for (const auto& part : split(v, ',')) {
    ParamSlot p;
    if (const auto ge = part.find(">="); ge != std::string::npos) {
      p.name = part.substr(0, ge);
      p.min = parse_int(part.substr(ge + 2), line, "params");
    } else if (const auto gt = part.find('>'); gt != std::string::npos) {
      p.name = part.substr(0, gt);
      p.min = parse_int(part.substr(gt + 1), line, "params") + 1;
    } else {
      p.name = part;
    }
    if (p.name.empty()) parse_fail(line, "empty parameter name");
    out.push_back(std::move(p));
  }
  return out;
}

inline std::string format_params(const std::vector<ParamSlot>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ",";
    s += ps[i].name;
    // m>=1 prints as m>0, matching how the constraint is usually written.
    if (ps[i].min) s += ">" + std::to_string(*ps[i].min - 1);
  }
  return s;
}

inline std::string join(const std::vector<std::string>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? std::string(1, sep) : "") + xs[i];
  return s;
}

inline DescriptorRecord parse_descriptor(const std::vector<std::pair<std::string, std::string>>& fields,
                                         std::size_t line) {
  DescriptorRecord r;
  bool have_id = false, have_source = false, have_group = false, have_name = false, have_dim = false;
  for (const auto& [k, v] : fields) {
    if (k == "id") {
      r.id = v;
      have_id = true;
    } else if (k == "source") {
      auto s = parse_source(v);
      if (!s || *s == Source::Prop31) parse_fail(line, "source must be Thm4.1 or Thm5.4, got '" + v + "'");
      r.source = *s;
      have_source = true;
    } else if (k == "item") {
      r.item = static_cast<int>(parse_int(v, line, k));
    } else if (k == "group") {
      const auto open = v.find('(');
      if (open == std::string::npos || v.back() != ')') parse_fail(line, "group must look like SL(n), got '" + v + "'");
      auto fam = parse_family(v.substr(0, open));
      if (!fam || *fam == Family::G2) parse_fail(line, "unknown group family in '" + v + "'");
      r.family = *fam;
      r.group_param = parse_expr(v.substr(open + 1, v.size() - open - 2), line, k);
      have_group = true;
    } else if (k == "only_n") {
      r.only_n = parse_int(v, line, k);
    } else if (k == "n_min") {
      r.n_min = parse_int(v, line, k);
    } else if (k == "name") {
      r.name = v;
      have_name = true;
    } else if (k == "aka") {
      r.aka = v;
    } else if (k == "pattern") {
      r.pattern = v;
    } else if (k == "dim") {
      r.dim = parse_expr(v, line, k);
      have_dim = true;
    } else if (k == "picard") {
      r.picard = static_cast<int>(parse_int(v, line, k));
    } else if (k == "params") {
      r.params = parse_params(v, line);
    } else if (k == "require") {
      r.require = v;
    } else if (k == "orbits") {
      for (const auto& e : split(v, '|')) r.orbits.push_back(parse_orbit(e, line));
    } else if (k == "flags") {
      r.flags = split(v, ',');
    } else if (k == "actions") {
      r.actions = static_cast<int>(parse_int(v, line, k));
    } else if (k == "actions_note") {
      r.actions_note = v;
    } else if (k == "note") {
      r.note = v;
    } else {
      parse_fail(line, "unknown descriptor key '" + k + "'");
    }
  }
  if (!have_id || !have_source || !have_group || !have_name || !have_dim)
    parse_fail(line, "descriptor needs id, source, group, name and dim");
  return r;
}

inline std::string format_descriptor(const DescriptorRecord& r) {
  std::vector<std::string> f;
  f.push_back("id=" + quote(r.id));
  f.push_back("source=" + to_string(r.source));
  f.push_back("item=" + std::to_string(r.item));
  f.push_back("group=" + to_string(r.family) + "(" + r.group_param.text() + ")");
  if (r.only_n) f.push_back("only_n=" + std::to_string(*r.only_n));
  if (r.n_min) f.push_back("n_min=" + std::to_string(*r.n_min));
  f.push_back("name=" + quote(r.name));
  if (!r.aka.empty()) f.push_back("aka=" + quote(r.aka));
  if (!r.pattern.empty()) f.push_back("pattern=" + quote(r.pattern));
  f.push_back("dim=" + r.dim.text());
  if (r.picard) f.push_back("picard=" + std::to_string(*r.picard));
  if (!r.params.empty()) f.push_back("params=" + format_params(r.params));
  if (!r.require.empty()) f.push_back("require=" + quote(r.require));
  std::vector<std::string> orbits;
  for (const auto& o : r.orbits) orbits.push_back(format_orbit(o));
  f.push_back("orbits=" + quote(join(orbits, '|')));
  if (!r.flags.empty()) f.push_back("flags=" + join(r.flags, ','));
  if (r.actions != 1) f.push_back("actions=" + std::to_string(r.actions));
  if (!r.actions_note.empty()) f.push_back("actions_note=" + quote(r.actions_note));
  if (!r.note.empty()) f.push_back("note=" + quote(r.note));
  return "descriptor " + join(f, ' ');
}

inline RelationRecord parse_relation(const std::vector<std::pair<std::string, std::string>>& fields,
                                     std::size_t line) {
  RelationRecord r;
  for (const auto& [k, v] : fields) {
    if (k == "from") r.from = v;
    else if (k == "op") r.op = v;
    else if (k == "to") r.to = v;
    else if (k == "center") r.center = v;
    else parse_fail(line, "unknown relation key '" + k + "'");
  }
  if (r.from.empty() || r.to.empty()) parse_fail(line, "relation needs from and to");
  if (r.op != "blow-up" && r.op != "blow-down") parse_fail(line, "relation op must be blow-up or blow-down");
  return r;
}

inline std::string format_relation(const RelationRecord& r) {
  std::string s = "relation from=" + quote(r.from) + " op=" + r.op + " to=" + quote(r.to);
  if (!r.center.empty()) s += " center=" + quote(r.center);
  return s;
}

}  // namespace detail

/// Throws DatabaseParseError with the offending line number.
inline Database parse_database(std::string_view text) {
  Database db;
  std::vector<std::string> pending;
  bool seen_format = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (nl == std::string_view::npos) detail::parse_fail(line_no, "file must end with a newline");

    const auto first = line.find_first_not_of(' ');
    if (first == std::string_view::npos || line[first] == '#') {
      pending.emplace_back(line);
      continue;
    }
    const auto sp = line.find(' ');
    const std::string tag(line.substr(0, sp));
    const auto rest = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
    const auto fields = detail::split_fields(rest, line_no);
    if (tag == "format") {
      if (seen_format) detail::parse_fail(line_no, "duplicate format line");
      if (fields.size() != 1 || fields[0].first != "version") detail::parse_fail(line_no, "format line needs version=");
      db.version = static_cast<int>(detail::parse_int(fields[0].second, line_no, "version"));
      if (db.version != 1) detail::parse_fail(line_no, "unsupported format version " + std::to_string(db.version));
      db.header = std::move(pending);
      pending.clear();
      seen_format = true;
      continue;
    }
    if (!seen_format) detail::parse_fail(line_no, "records before the format line");
    if (tag == "descriptor") {
      auto r = detail::parse_descriptor(fields, line_no);
      r.preamble = std::move(pending);
      for (const auto& other : db.descriptors)
        if (other.id == r.id) detail::parse_fail(line_no, "duplicate descriptor id '" + r.id + "'");
      db.descriptors.push_back(std::move(r));
    } else if (tag == "relation") {
      auto r = detail::parse_relation(fields, line_no);
      r.preamble = std::move(pending);
      db.relations.push_back(std::move(r));
    } else {
      detail::parse_fail(line_no, "unknown record tag '" + tag + "'");
    }
    pending.clear();
  }
  if (!seen_format) detail::parse_fail(line_no, "missing format line");
  db.trailer = std::move(pending);
  return db;
}

/// Records are written in stored order: all descriptors, then all relations.
inline std::string serialize_database(const Database& db) {
  std::ostringstream out;
  for (const auto& l : db.header) out << l << '\n';
  out << "format version=" << db.version << '\n';
  for (const auto& r : db.descriptors) {
    for (const auto& l : r.preamble) out << l << '\n';
    out << detail::format_descriptor(r) << '\n';
  }
  for (const auto& r : db.relations) {
    for (const auto& l : r.preamble) out << l << '\n';
    out << detail::format_relation(r) << '\n';
  }
  for (const auto& l : db.trailer) out << l << '\n';
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errors::kDatabaseParse, "cannot open database file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Database load_database(const std::string& path) { return parse_database(read_text_file(path)); }

}  // namespace lieclass
