#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockprod/equations.hpp"
#include "blockprod/mpint.hpp"

namespace blockprod {

/// One integer solution found by a search (or transcribed from a table).
/// b and k are 0 when the equation has no such parameter; t is only used by
/// the triple-cube equation.
struct SolutionRecord {
  EquationId eq = EquationId::z2;
  MPInt b = 0;
  MPInt k = 0;
  MPInt x = 0;
  MPInt y = 0;
  MPInt z = 0;
  std::optional<MPInt> t;
  std::vector<std::string> tags;  // sorted subset of {degenerate, fibonacci, trivial}

  void add_tag(const std::string& tag);
  bool has_tag(std::string_view tag) const;
};

/// Canonical ordering key (eq, b, k, x, y, z, t); tags do not participate.
bool key_less(const SolutionRecord& a, const SolutionRecord& b);
bool key_equal(const SolutionRecord& a, const SolutionRecord& b);
void sort_records(std::vector<SolutionRecord>& records);

/// Substitutes the record into its equation (b, and t where used).
bool verify_record(const SolutionRecord& rec);

/// {"eq":"z2","b":3,"k":7,"x":5,"y":12,"z":360,"tags":[]}
std::string to_jsonl(const SolutionRecord& rec);
/// Throws std::invalid_argument on malformed input.
SolutionRecord from_jsonl(std::string_view line);

std::string csv_header();
std::string to_csv(const SolutionRecord& rec);

enum class OutputFormat { jsonl, csv };
std::string format_records(const std::vector<SolutionRecord>& records, OutputFormat fmt);

}  // namespace blockprod
