#include "trispec/output.hpp"

#include <sstream>

#include "json.hpp"

namespace trispec {

std::string normalization_note(const TriangleSignature& sig) {
  switch (classify(sig)) {
    case GeometryClass::Spherical:
      return "unit-radius sphere; eigenvalues are l(l+1)";
    case GeometryClass::Euclidean:
      if (sig.q() == 4)
        return "square translation lattice tau=(2pi,0), sigma=(0,2pi); "
               "eigenvalues are m^2+n^2";
      return "hexagonal translation lattice tau=(4pi/sqrt3,0), "
             "sigma=(2pi/sqrt3,2pi); eigenvalues are m^2+mn+n^2";
    case GeometryClass::Hyperbolic:
      break;
  }
  return "hyperbolic quotients are outside the scope of this tool";
}

std::string to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["group"] = record.group;
  j["geometry"] = record.geometry;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : record.entries) {
    nlohmann::json row;
    row["lambda"] = e.lambda;
    row["multiplicity"] = e.multiplicity;
    if (e.degree_l) row["degree_l"] = *e.degree_l;
    j["entries"].push_back(std::move(row));
  }
  j["metadata"]["tool_version"] = record.tool_version;
  j["metadata"]["normalization"] = record.normalization;
  if (record.seed) j["metadata"]["seed"] = *record.seed;
  return j.dump(2) + "\n";
}

OutputRecord record_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  OutputRecord record;
  record.group = j.at("group").get<std::array<int, 3>>();
  record.geometry = j.at("geometry").get<std::string>();
  for (const auto& row : j.at("entries")) {
    SpectrumEntry e;
    e.lambda = row.at("lambda").get<long long>();
    e.multiplicity = row.at("multiplicity").get<long long>();
    if (row.contains("degree_l")) e.degree_l = row.at("degree_l").get<int>();
    record.entries.push_back(e);
  }
  record.tool_version = j.at("metadata").at("tool_version").get<std::string>();
  record.normalization = j.at("metadata").at("normalization").get<std::string>();
  if (j.at("metadata").contains("seed"))
    record.seed = j.at("metadata").at("seed").get<unsigned long long>();
  return record;
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream out;
  out << "lambda,degree_l,multiplicity\n";
  for (const auto& e : record.entries) {
    out << e.lambda << ',';
    if (e.degree_l) out << *e.degree_l;
    out << ',' << e.multiplicity << '\n';
  }
  return out.str();
}

}  // namespace trispec
