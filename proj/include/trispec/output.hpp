#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trispec/core.hpp"

namespace trispec {

inline constexpr const char* kToolVersion = "0.1.0";

struct OutputRecord {
  std::array<int, 3> group{};
  std::string geometry;
  std::vector<SpectrumEntry> entries;  // sorted by ascending eigenvalue
  std::string tool_version = kToolVersion;
  std::string normalization;
  std::optional<unsigned long long> seed;

  bool operator==(const OutputRecord&) const = default;
};

// One-line statement of the scale convention under which the spectra are
// integer-valued.
std::string normalization_note(const TriangleSignature& sig);

std::string to_json(const OutputRecord& record);
OutputRecord record_from_json(const std::string& text);

// Header lambda,degree_l,multiplicity; degree_l is blank for euclidean rows.
// Rows use '\n' and no locale formatting.
std::string to_csv(const OutputRecord& record);

}  // namespace trispec
