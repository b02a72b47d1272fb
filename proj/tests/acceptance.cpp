// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieclass/cli.hpp"
#include "lieclass/lieclass.hpp"
#include "oracles.hpp"

namespace {

using namespace lieclass;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

DynkinType type_of(const std::string& s) { return *parse_dynkin(s); }

std::string classical(char series, int rank) { return std::string(1, series) + std::to_string(rank); }

std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({Series::A, n});
    if (n >= 2) out.push_back({Series::B, n});
    if (n >= 2) out.push_back({Series::C, n});
    if (n >= 3) out.push_back({Series::D, n});
  }
  if (max_rank >= 2) out.push_back({Series::G, 2});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back({Series::E, n});
  return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Check rg_table() {
  Check c;
  const auto t0 = Clock::now();
  for (int m = 2; m <= 9; ++m) c.expect(r_min(type_of(classical('A', m - 1))).r == m - 1, "A" + std::to_string(m - 1));
  for (int s = 2; s <= 5; ++s) c.expect(r_min(type_of(classical('C', s))).r == 2 * s - 1, "C" + std::to_string(s));
  for (int m = 7; m <= 12; ++m) {
    const auto t = m % 2 ? classical('B', (m - 1) / 2) : classical('D', m / 2);
    c.expect(r_min(type_of(t)).r == m - 2, t);
  }
  c.expect(r_min(type_of("G2")).r == 5, "G2");
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s");
  return c;
}

Check sp4_duplicity() {
  Check c;
  const auto rs = RootSystem(type_of("C2"));
  const auto rm = r_min(rs);
  c.expect(rm.r == 3 && rm.nodes.size() == 2, "argmin set");
  for (int v : rm.nodes) c.expect(codim_parabolic(rs, ParabolicMarking::make(rs.type(), {v})) == 3, "codim");
  std::set<std::string> ids;
  for (const auto& h : minimal_homogeneous_varieties(rs)) ids.insert(h.identification.name());
  c.expect(ids == std::set<std::string>{"P^3", "Q^3"}, "identifications");
  return c;
}

Check spin8() {
  Check c;
  const auto rm = r_min(type_of("D4"));
  c.expect(rm.r == 6 && rm.nodes == std::vector<int>{1, 3, 4}, "argmin set");
  for (const auto& h : minimal_homogeneous_varieties(type_of("D4")))
    c.expect(h.identification.name() == "Q^6", "identification " + h.identification.name());
  return c;
}

Check min_rep_criterion() {
  Check c;
  for (const auto& t : all_types(6)) {
    const RootSystem rs(t);
    const auto r = r_min(rs).r;
    const auto d = min_nontrivial_irrep(rs).dim;
    c.expect(d > r, t.to_string() + " min irrep <= r");
    const bool expected = t.series == Series::A || t.series == Series::C || t.to_string() == "B2" ||
                          t.to_string() == "D3";
    c.expect((d == r + 1) == expected, t.to_string() + " r+1 mismatch");
  }
  return c;
}

Check weyl_vs_freudenthal() {
  Check c;
  const auto t0 = Clock::now();
  int cases = 0;
  for (const auto& t : all_types(3)) {
    const RootSystem rs(t);
    std::vector<long long> w(static_cast<std::size_t>(t.rank), 0);
    while (true) {
      const auto dw = DominantWeight::make(t, {w.begin(), w.end()});
      c.expect(weyl_dim(rs, dw) == oracle::freudenthal_dimension(rs.cartan(), w), t.to_string() + " " + dw.to_string());
      ++cases;
      std::size_t i = 0;
      while (i < w.size() && w[i] == 2) w[i++] = 0;
      if (i == w.size()) break;
      ++w[i];
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + "s");
  c.detail << (c.ok ? "" : "; ") << cases << " cases";
  return c;
}

Check cone_hilbert() {
  Check c;
  for (int n = 2; n <= 5; ++n) {
    const auto t = type_of(classical('A', n - 1));
    const auto h = cone_hilbert_function(ParabolicMarking::make(t, {1}), DominantWeight::fundamental(t, 1), 6);
    for (int k = 0; k <= 6; ++k)
      c.expect(h[k] == oracle::binomial(k + n - 1, n - 1), t.to_string() + " k=" + std::to_string(k));
  }
  const auto a2 = type_of("A2");
  const auto adj = cone_hilbert_function(ParabolicMarking::make(a2, {1, 2}), DominantWeight::make(a2, {1, 1}), 1);
  c.expect(adj[1] == 8, "adjoint entry");
  return c;
}

Check cover_order() {
  Check c;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int len = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<long long> v;
    while (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
      v.clear();
      for (int i = 0; i < len; ++i) v.push_back(std::uniform_int_distribution<long long>(-500, 500)(rng));
    }
    const long long m = std::uniform_int_distribution<long long>(1, 40)(rng);
    std::vector<BigInt> big, scaled;
    for (long long x : v) {
      big.emplace_back(x);
      scaled.emplace_back(x * m);
    }
    const auto r = cone_cover_order(ChernVector::make(big));
    c.expect(r == oracle::naive_gcd(v), "gcd trial " + std::to_string(trial));
    c.expect(cone_cover_order(ChernVector::make(scaled)) == m * r, "scaling trial " + std::to_string(trial));
  }
  return c;
}

std::vector<std::string> sorted_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

Check golden_files() {
  Check c;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"classify_SL2_n2.txt", {"--group", "SL", "--param", "2", "--dim", "2"}},
      {"classify_SL3_n3.txt", {"--group", "SL", "--param", "3", "--dim", "3"}},
      {"classify_SL4_n4.txt", {"--group", "SL", "--param", "4", "--dim", "4"}},
      {"classify_Sp4_n3.txt", {"--group", "Sp", "--param", "4", "--dim", "3"}},
      {"classify_Sp4_n4.txt", {"--group", "Sp", "--param", "4", "--dim", "4"}},
      {"classify_Sp6_n6.txt", {"--group", "Sp", "--param", "6", "--dim", "6"}},
      {"classify_Spin8_n7.txt", {"--group", "Spin", "--param", "8", "--dim", "7"}},
      {"classify_Spin9_n8.txt", {"--group", "Spin", "--param", "9", "--dim", "8"}},
      {"classify_SL3_n4_quasi.txt", {"--group", "SL", "--param", "3", "--dim", "4", "--quasihomogeneous"}},
  };
  for (const auto& [file, args] : cases) {
    std::vector<std::string> argv{"--db", LIECLASS_SHIPPED_DB, "classify"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(argv, out, err);
    std::ifstream in(std::string(LIECLASS_GOLDEN_DIR) + "/" + file);
    std::ostringstream golden;
    golden << in.rdbuf();
    c.expect(in && code == 0 && sorted_lines(out.str()) == sorted_lines(golden.str()), file);
  }
  return c;
}

DescriptorRecord& record(Database& db, const std::string& id) {
  for (auto& r : db.descriptors)
    if (r.id == id) return r;
  throw std::runtime_error("no record " + id);
}

Check self_validation() {
  Check c;
  const Database shipped = load_database(LIECLASS_SHIPPED_DB);
  c.expect(validate_database(shipped).empty(), "shipped data has violations");
  const std::vector<std::pair<std::string, std::function<void(Database&)>>> faults = {
      {"R1",
       [](Database& db) {
         record(db, "T54-3").orbits.push_back(
             OrbitSchema{OrbitKind::Intermediate, *AffineExpr::parse("1"), {}, {}, false});
       }},
      {"R2", [](Database& db) { record(db, "SL-1").flags.clear(); }},
      {"R3", [](Database& db) { record(db, "Sp-4a").orbits[0].label = "P^3"; }},
      {"R4", [](Database& db) { record(db, "T54-3").orbits.pop_back(); }},
      {"R5",
       [](Database& db) {
         auto r = record(db, "Spin-2");
         r.id = "Spin-9";
         r.name = "Z^n";
         db.descriptors.push_back(r);
       }},
  };
  for (const auto& [rule, inject] : faults) {
    Database db = shipped;
    inject(db);
    bool fired = false;
    for (const auto& v : validate_database(db)) fired = fired || v.rule == rule;
    c.expect(fired, rule + " did not fire");
  }
  return c;
}

Check conormal_ranges() {
  Check c;
  for (int n = 2; n <= 8; ++n) {
    const auto a = type_of(classical('A', n - 1));
    c.expect(admissible_conormal_range(ParabolicMarking::make(a, {1})) == IntInterval{1, n - 1}, a.to_string());
  }
  // Quadric Q^{n-1} = Spin(n+1)/P1 for n + 1 >= 5.
  for (int n = 4; n <= 8; ++n) {
    const int m = n + 1;
    const auto t = type_of(m % 2 ? classical('B', (m - 1) / 2) : classical('D', m / 2));
    c.expect(admissible_conormal_range(ParabolicMarking::make(t, {1})) == IntInterval{1, n - 2}, t.to_string());
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"r_min table for A, C, B/D and G2", rg_table},
      {"C2 has two minimal varieties P^3 and Q^3", sp4_duplicity},
      {"D4 minimal varieties are three Q^6", spin8},
      {"minimal representation exceeds r_min, r_min+1 exactly for A, C, B2, D3", min_rep_criterion},
      {"Weyl dimension matches Freudenthal oracle", weyl_vs_freudenthal},
      {"cone Hilbert functions", cone_hilbert},
      {"cone cover order is the gcd", cover_order},
      {"classification golden files", golden_files},
      {"database self-validation", self_validation},
      {"conormal ranges", conormal_ranges},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    failures += c.ok ? 0 : 1;
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    const auto d = c.detail.str();
    if (!d.empty()) std::cout << " (" << d << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
