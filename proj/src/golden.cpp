#include "blockprod/golden.hpp"

#include <algorithm>
#include <array>
#include <map>


namespace blockprod {

namespace {

struct Row {
  long b;
  const char* x;
  const char* y;
  const char* z;
};

constexpr std::array<Row, 58> kTable1{{
    {3, "5", "12", "360"},        {3, "7", "18", "1260"},        {3, "4", "21", "504"},
    {3, "8", "33", "3960"},       {3, "35", "60", "95760"},      {3, "10", "42", "8190"},
    {3, "7", "45", "5040"},       {3, "32", "87", "146160"},     {3, "93", "245", "3437280"},
    {3, "125", "363", "9662400"}, {3, "77", "333", "4102560"},

    {5, "7", "30", "2100"},       {5, "11", "49", "11088"},      {5, "6", "49", "2772"},
    {5, "11", "55", "13200"},     {5, "6", "55", "3300"},        {5, "21", "70", "54600"},
    {5, "7", "75", "8400"},       {5, "19", "100", "79800"},     {5, "3605", "3703", "48773919600"},
    {5, "145", "343", "11083800"}, {5, "33", "280", "877800"},   {5, "16", "275", "277200"},

    {7, "250", "507", "45103500"}, {7, "10", "27", "3060"},      {7, "105", "128", "1552320"},
    {7, "8", "42", "2940"},       {7, "41", "75", "167280"},     {7, "34", "75", "125460"},
    {7, "9", "56", "7056"},       {7, "32", "91", "152880"},     {7, "13", "98", "38220"},
    {7, "42", "128", "388080"},   {7, "8", "105", "11760"},      {7, "8", "128", "15840"},
    {7, "12", "140", "55860"},    {7, "18", "169", "154440"},    {7, "32", "189", "458640"},
    {7, "11", "169", "61776"},    {7, "185", "363", "17387040"},

    {9, "15", "36", "9720"},      {9, "21", "54", "34020"},      {9, "12", "63", "13608"},
    {9, "24", "99", "106920"},    {9, "105", "180", "2585520"},  {9, "11", "90", "17820"},
    {9, "30", "126", "221130"},   {9, "21", "135", "136080"},    {9, "25", "153", "220320"},
    {9, "10", "171", "30780"},    {9, "96", "261", "3946320"},

    {11, "91", "119", "1113840"}, {11, "13", "132", "37752"},    {11, "12", "253", "66792"},

    {13, "22", "77", "55440"},    {13, "14", "169", "42588"},    {13, "15", "182", "70980"},
    {13, "99", "288", "4767840"},
}};

constexpr std::array<Row, 10> kTable2{{
    {0, "2", "1", "2"},
    {0, "14", "5", "4"},
    {0, "26", "12", "3"},
    {0, "48", "1", "140"},
    {0, "48", "2", "70"},
    {0, "1680", "5", "4756"},
    {0, "1680", "14", "1189"},
    {0, "13454", "90", "1798"},
    {0, "57120", "168", "6214"},
    {0, "114242", "337", "6214"},
}};

constexpr std::array<Row, 3> kPairCube{{
    {0, "11", "242", "198"},
    {0, "32", "242", "396"},
    {0, "539", "3024", "13860"},
}};

constexpr std::array<Row, 7> kFib{{
    {1, "5", "13", "64"},
    {1, "13", "34", "441"},
    {1, "34", "89", "3025"},
    {1, "89", "233", "20736"},
    {1, "233", "610", "142129"},
    {1, "610", "1597", "974169"},
    {1, "1597", "4181", "6677056"},
}};

template <std::size_t N>
GoldenTable build(GoldenId id, EquationId eq, const std::array<Row, N>& rows) {
  GoldenTable table;
  table.id = id;
  for (const auto& r : rows) {
    SolutionRecord rec;
    rec.eq = eq;
    rec.x = mpint_from_string(r.x);
    rec.y = mpint_from_string(r.y);
    rec.z = mpint_from_string(r.z);
    if (eq == EquationId::z2 || eq == EquationId::z3) {
      rec.b = r.b;
      rec.k = rec.y - rec.x;
    }
    if (id == GoldenId::fibcorollary) rec.add_tag("fibonacci");
    table.rows.push_back(std::move(rec));
  }
  sort_records(table.rows);
  return table;
}

}  // namespace

const char* golden_name(GoldenId id) {
  switch (id) {
    case GoldenId::table1: return "table1";
    case GoldenId::table2: return "table2";
    case GoldenId::paircube3: return "paircube3";
    case GoldenId::fibcorollary: return "fibcorollary";
  }
  return "?";
}

const GoldenTable& golden_table(GoldenId id) {
  static const std::map<GoldenId, GoldenTable> tables{
      {GoldenId::table1, build(GoldenId::table1, EquationId::z2, kTable1)},
      {GoldenId::table2, build(GoldenId::table2, EquationId::ratio, kTable2)},
      {GoldenId::paircube3, build(GoldenId::paircube3, EquationId::paircube, kPairCube)},
      {GoldenId::fibcorollary, build(GoldenId::fibcorollary, EquationId::z3, kFib)},
  };
  return tables.at(id);
}

std::uint64_t golden_checksum(const GoldenTable& table) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& rec : table.rows) {
    for (char c : to_jsonl(rec) + '\n') {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::uint64_t golden_expected_checksum(GoldenId id) {
  switch (id) {
    case GoldenId::table1: return 0x487ac15ee7cad631ULL;
    case GoldenId::table2: return 0x3371219a1947a87eULL;
    case GoldenId::paircube3: return 0xd900d75f04438a78ULL;
    case GoldenId::fibcorollary: return 0x3a309f67fb97e586ULL;
  }
  return 0;
}

std::vector<std::string> GoldenDiff::lines() const {
  std::vector<std::string> out;
  for (const auto& r : missing) out.push_back("missing " + to_jsonl(r));
  for (const auto& r : unexpected) out.push_back("unexpected " + to_jsonl(r));
  return out;
}

GoldenDiff golden_compare(const std::vector<SolutionRecord>& actual, const GoldenTable& table) {
  std::vector<SolutionRecord> a = actual;
  std::vector<SolutionRecord> g = table.rows;
  sort_records(a);
  sort_records(g);
  GoldenDiff diff;
  std::set_difference(g.begin(), g.end(), a.begin(), a.end(), std::back_inserter(diff.missing), key_less);
  std::set_difference(a.begin(), a.end(), g.begin(), g.end(), std::back_inserter(diff.unexpected), key_less);
  return diff;
}

}  // namespace blockprod
