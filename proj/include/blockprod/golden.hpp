#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockprod/records.hpp"

namespace blockprod {

enum class GoldenId { table1, table2, paircube3, fibcorollary };

struct GoldenTable {
  GoldenId id = GoldenId::table1;
  std::vector<SolutionRecord> rows;  // canonical order
};

const char* golden_name(GoldenId id);
const GoldenTable& golden_table(GoldenId id);

/// FNV-1a 64 over the JSONL serialization of the rows.
std::uint64_t golden_checksum(const GoldenTable& table);
/// Value recorded when the tables were transcribed.
std::uint64_t golden_expected_checksum(GoldenId id);

struct GoldenDiff {
  std::vector<SolutionRecord> missing;
  std::vector<SolutionRecord> unexpected;
  bool empty() const { return missing.empty() && unexpected.empty(); }
  /// "missing <jsonl>" / "unexpected <jsonl>" lines.
  std::vector<std::string> lines() const;
};

/// Symmetric difference on the canonical key. Tags are ignored.
GoldenDiff golden_compare(const std::vector<SolutionRecord>& actual, const GoldenTable& table);

}  // namespace blockprod
