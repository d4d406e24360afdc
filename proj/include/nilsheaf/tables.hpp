#pragma once

// Reference data for induced nilpotent orbits in the exceptional Lie
// algebras, with lookups and an internal consistency audit.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilsheaf/error.hpp"

namespace nilsheaf {

struct OrbitRecord {
  std::string group;
  std::string label;
  std::string gamma_type;
  int sheet_count = 0;
  bool even = false;
  std::vector<int> ranks;
  int c = 0;
  int c_gamma = 0;
  // c_gamma comes from a case-by-case argument about the fixed locus, not
  // from a fixed-space count.
  bool c_gamma_starred = false;
  bool operator==(const OrbitRecord&) const = default;
};

// Columns: group, label, gamma, sheets, even, ranks, c, c_gamma, starred.
inline constexpr const char* kOrbitTable = R"TSV(
E8	E8	1	1	1	8	8	8	0
E8	E8(a1)	1	1	1	7	7	7	0
E8	E8(a2)	1	1	1	6	6	6	0
E8	E8(a3)	S2	2	1	6,5	7	5	0
E8	E7	1	1	0	4	4	4	0
E8	E8(a4)	S2	2	1	5,4	6	4	0
E8	E8(b4)	S2	2	1	4,3	5	4	0
E8	E7(a1)	1	1	0	5	5	5	0
E8	E8(a5)	S2	2	1	4,3	5	3	0
E8	E8(b5)	S3	3	1	4,4,3	7	3	0
E8	D7	1	1	0	2	2	2	0
E8	E7(a2)	1	1	0	3	4	4	1
E8	E8(a6)	S3	3	1	3,3,2	6	2	0
E8	D7(a1)	S2	2	1	3,2	4	3	0
E8	E6+A1	1	1	0	2	2	2	0
E8	E7(a3)	S2	1	0	4	4	2	0
E8	E8(b6)	S3	3	1	2,2,1	5	2	0
E8	E6(a1)+A1	S2	1	0	3	3	1	0
E8	A7	1	1	0	1	1	1	0
E8	E6	1	1	1	4	4	4	0
E8	D7(a2)	S2	2	0	2,2	3	2	0
E8	D6	1	1	0	2	2	2	0
E8	E6(a1)	S2	2	1	3,3	4	3	0
E8	D5+A2	S2	2	1	2,1	3	2	0
E8	E7(a4)	S2	2	0	2,2	3	2	0
E8	A6+A1	1	1	0	1	1	1	0
E8	D6(a1)	S2	1	0	3	3	3	0
E8	A6	1	1	1	2	2	2	0
E8	E8(a7)	S5	4	1	2,2,1,1	10	1	0
E8	D5+A1	1	1	0	2	2	2	0
E8	E7(a5)	S3	2	0	1,1	6	2	1
E8	D6(a2)	S2	1	0	1	3	2	1
E8	E6(a3)+A1	S2	1	0	1	3	2	1
E8	D5	1	1	1	3	3	3	0
E8	E6(a3)	S2	2	1	2,2	3	2	0
E8	D4+A2	S2	1	1	2	2	2	0
E8	A5	1	1	0	1	1	1	0
E8	D5(a1)+A1	1	1	0	1	1	1	0
E8	A4+A2+A1	1	1	0	1	1	1	0
E8	A4+A2	1	1	1	1	1	1	0
E8	A4+2A1	S2	1	0	1	1	0	0
E8	D5(a1)	S2	1	0	2	2	1	0
E8	A4+A1	S2	1	0	1	1	0	0
E8	D4+A1	1	1	0	1	1	1	0
E8	D4(a1)+A2	S2	1	1	1	1	1	0
E8	A4	S2	1	1	2	2	2	0
E8	A3+A2	S2	2	0	1,1	2	1	0
E8	D4	1	1	1	2	2	2	0
E8	D4(a1)	S3	2	1	1,1	3	1	0
E8	2A2	S2	1	1	1	1	1	0
E8	A3	1	1	0	1	1	1	0
E8	A2	S2	1	1	1	1	1	0
E7	E7	1	1	1	7	7	7	0
E7	E7(a1)	1	1	1	6	6	6	0
E7	E7(a2)	1	1	1	5	5	5	0
E7	E7(a3)	S2	2	1	5,4	6	4	0
E7	E6	1	1	1	4	4	4	0
E7	D6	1	1	0	3	3	3	0
E7	E6(a1)	S2	2	1	4,3	5	3	0
E7	E7(a4)	S2	2	1	3,2	4	3	0
E7	D6(a1)	1	1	0	4	4	4	0
E7	D5+A1	1	1	0	3	3	3	0
E7	A6	1	1	1	2	2	2	0
E7	D5	1	1	1	3	3	3	0
E7	E7(a5)	S3	3	1	3,3,2	6	2	0
E7	D6(a2)	1	1	0	2	3	3	1
E7	E6(a3)	S2	2	1	2,2	3	2	0
E7	A5+A1	1	1	0	1	1	1	0
E7	(A5)'	1	1	0	1	1	1	0
E7	D5(a1)+A1	1	1	1	2	2	2	0
E7	D5(a1)	S2	1	0	3	3	2	0
E7	A4+A2	1	1	1	1	1	1	0
E7	A4+A1	S2	1	0	2	2	0	0
E7	(A5)''	1	1	1	3	3	3	0
E7	D4+A1	1	1	0	1	1	1	0
E7	A4	S2	2	1	2,2	3	2	0
E7	A3+A2+A1	1	1	1	1	1	1	0
E7	A3+A2	S2	2	0	1,1	2	1	0
E7	D4(a1)+A1	S2	1	0	2	2	2	0
E7	D4	1	1	1	2	2	2	0
E7	A3+2A1	1	1	0	1	1	1	0
E7	D4(a1)	S3	2	1	1,1	3	1	0
E7	(A3+A1)''	1	1	1	2	2	2	0
E7	A3	1	1	0	1	1	1	0
E7	2A2	1	1	1	1	1	1	0
E7	A2+3A1	1	1	1	1	1	1	0
E7	A2+A1	S2	1	0	1	1	0	0
E7	A2	S2	1	1	1	1	1	0
E7	(3A1)''	1	1	1	1	1	1	0
E6	E6	1	1	1	6	6	6	0
E6	E6(a1)	1	1	1	5	5	5	0
E6	D5	1	1	1	4	4	4	0
E6	E6(a3)	S2	2	1	4,3	5	3	0
E6	D4+A1	1	1	0	1	1	1	0
E6	A5	1	1	0	2	2	2	0
E6	D5(a1)	1	1	0	3	3	3	0
E6	A4+A1	1	1	0	2	2	2	0
E6	A4	1	1	1	3	3	3	0
E6	D4(a1)	S3	3	1	2,2,1	5	1	0
E6	A3+A1	1	1	0	1	2	2	1
E6	A3	1	1	0	2	2	2	0
E6	A2+2A1	1	1	0	1	1	1	0
E6	2A2	1	1	0	2	2	2	0
E6	A2+A1	1	1	0	1	1	1	0
E6	A2	S2	1	1	1	1	1	0
E6	2A1	1	1	0	1	1	1	0
F4	F4	1	1	1	4	4	4	0
F4	F4(a1)	S2	2	1	3,3	4	3	0
F4	F4(a2)	S2	2	1	2,2	3	2	0
F4	B3	1	1	1	2	2	2	0
F4	C3	1	1	0	2	2	2	0
F4	F4(a3)	S4	3	1	2,1,1	6	1	0
F4	C3(a1)	S2	1	0	1	3	2	1
F4	B2	S2	1	1	1	1	1	0
F4	~A2	1	1	1	1	1	1	0
F4	A2	S2	1	1	1	1	1	0
G2	G2	1	1	1	2	2	2	0
G2	G2(a1)	S3	2	1	1,1	3	1	0
)TSV";

inline const std::vector<std::string>& known_groups() {
  static const std::vector<std::string> g{"G2", "F4", "E6", "E7", "E8"};
  return g;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<OrbitRecord> parse_orbit_table(const std::string& text) {
  std::vector<OrbitRecord> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split(line, '\t');
    if (f.size() != 9) throw Error(ErrorCode::InternalError, 0, "malformed table row: " + line);
    OrbitRecord r;
    r.group = f[0];
    r.label = f[1];
    r.gamma_type = f[2];
    r.sheet_count = std::stoi(f[3]);
    r.even = f[4] == "1";
    for (const auto& x : split(f[5], ',')) r.ranks.push_back(std::stoi(x));
    r.c = std::stoi(f[6]);
    r.c_gamma = std::stoi(f[7]);
    r.c_gamma_starred = f[8] == "1";
    out.push_back(std::move(r));
  }
  return out;
}

inline const std::vector<OrbitRecord>& orbit_dataset() {
  static const std::vector<OrbitRecord> data = parse_orbit_table(kOrbitTable);
  return data;
}

inline std::string serialize(const OrbitRecord& r) {
  std::ostringstream os;
  os << r.group << '\t' << r.label << '\t' << r.gamma_type << '\t' << r.sheet_count << '\t' << (r.even ? 1 : 0) << '\t';
  for (std::size_t k = 0; k < r.ranks.size(); ++k) os << (k ? "," : "") << r.ranks[k];
  os << '\t' << r.c << '\t' << r.c_gamma << '\t' << (r.c_gamma_starred ? 1 : 0);
  return os.str();
}

inline std::string serialize(const std::vector<OrbitRecord>& rs) {
  std::string out;
  for (const auto& r : rs) out += serialize(r) + "\n";
  return out;
}

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<OrbitRecord> records(const std::string& group) {
  std::vector<OrbitRecord> out;
  for (const auto& r : orbit_dataset())
    if (r.group == group) out.push_back(r);
  return out;
}

inline bool is_known_group(const std::string& g) {
  const auto& k = known_groups();
  return std::find(k.begin(), k.end(), g) != k.end();
}

inline OrbitRecord lookup(const std::string& group, const std::string& label) {
  for (const auto& r : orbit_dataset())
    if (r.group == group && r.label == label) return r;
  throw Error(ErrorCode::UnknownOrbit, 0, "no induced orbit " + label + " in " + group);
}

// Induced orbits whose fixed-locus question stays open.
inline std::vector<std::pair<std::string, std::string>> unresolved() {
  return {{"F4", "C3(a1)"}, {"E6", "A3+A1"},  {"E7", "D6(a2)"}, {"E8", "E6(a3)+A1"},
          {"E8", "D6(a2)"}, {"E8", "E7(a2)"}, {"E8", "E7(a5)"}};
}

// Orbits whose starred c_gamma value is settled by a case-by-case argument.
inline std::vector<std::pair<std::string, std::string>> starred_coverage() {
  return {{"F4", "C3(a1)"}, {"E6", "A3+A1"},  {"E7", "D6(a2)"}, {"E8", "E6(a3)+A1"},
          {"E8", "D6(a2)"}, {"E8", "E7(a5)"}, {"E8", "E7(a2)"}};
}

inline std::vector<std::string> consistency_report(const std::vector<OrbitRecord>& rs) {
  std::vector<std::string> v;
  static const std::set<std::string> gammas{"1", "S2", "S3", "S4", "S5"};
  auto cov = starred_coverage();
  std::set<std::pair<std::string, std::string>> covered(cov.begin(), cov.end());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : rs) {
    std::string id = r.group + " " + r.label;
    if (!is_known_group(r.group)) v.push_back(id + ": unknown group");
    if (!gammas.count(r.gamma_type)) v.push_back(id + ": unknown component group type " + r.gamma_type);
    if (static_cast<int>(r.ranks.size()) != r.sheet_count) v.push_back(id + ": rank count differs from sheet count");
    if (!r.ranks.empty() && *std::max_element(r.ranks.begin(), r.ranks.end()) > r.c)
      v.push_back(id + ": a sheet rank exceeds c");
    if (r.c_gamma > r.c) v.push_back(id + ": c_gamma exceeds c");
    if (r.c_gamma_starred && !covered.count({r.group, r.label})) v.push_back(id + ": starred value without justification");
    if (!seen.insert({r.group, r.label}).second) v.push_back(id + ": duplicate row");
  }
  return v;
}

inline std::vector<std::string> consistency_report() { return consistency_report(orbit_dataset()); }

}  // namespace nilsheaf
