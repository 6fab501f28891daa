#include "blockprod/records.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace blockprod {

void SolutionRecord::add_tag(const std::string& tag) {
  auto it = std::lower_bound(tags.begin(), tags.end(), tag);
  if (it == tags.end() || *it != tag) tags.insert(it, tag);
}

bool SolutionRecord::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

int compare(const MPInt& a, const MPInt& b) { return cmp(a, b); }

int compare_keys(const SolutionRecord& a, const SolutionRecord& b) {
  if (a.eq != b.eq) return a.eq < b.eq ? -1 : 1;
  for (auto [l, r] : {std::pair{&a.b, &b.b}, {&a.k, &b.k}, {&a.x, &b.x}, {&a.y, &b.y}, {&a.z, &b.z}}) {
    if (int c = compare(*l, *r); c != 0) return c < 0 ? -1 : 1;
  }
  if (a.t.has_value() != b.t.has_value()) return a.t.has_value() ? 1 : -1;
  if (a.t) {
    if (int c = compare(*a.t, *b.t); c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool key_less(const SolutionRecord& a, const SolutionRecord& b) { return compare_keys(a, b) < 0; }
bool key_equal(const SolutionRecord& a, const SolutionRecord& b) { return compare_keys(a, b) == 0; }

void sort_records(std::vector<SolutionRecord>& records) {
  std::stable_sort(records.begin(), records.end(), key_less);
}

bool verify_record(const SolutionRecord& rec) {
  Assignment values{{"x", rec.x}, {"y", rec.y}, {"z", rec.z}};
  if (rec.eq == EquationId::z2 || rec.eq == EquationId::z3) values.emplace("b", rec.b);
  if (rec.eq == EquationId::triplecube) {
    if (!rec.t) return false;
    values.emplace("t", *rec.t);
  }
  return verify_equation(rec.eq, constant_assignment(values)).holds;
}

std::string to_jsonl(const SolutionRecord& rec) {
  std::string out = "{\"eq\":\"";
  out += equation_name(rec.eq);
  out += "\",\"b\":" + to_string(rec.b);
  out += ",\"k\":" + to_string(rec.k);
  out += ",\"x\":" + to_string(rec.x);
  out += ",\"y\":" + to_string(rec.y);
  out += ",\"z\":" + to_string(rec.z);
  if (rec.t) out += ",\"t\":" + to_string(*rec.t);
  out += ",\"tags\":[";
  for (std::size_t i = 0; i < rec.tags.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + rec.tags[i] + '"';
  }
  out += "]}";
  return out;
}

namespace {

// SAX consumer that keeps integers as decimal text so values beyond 64 bits
// survive parsing.
class RecordSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::map<std::string, std::string> integers;
  std::map<std::string, std::string> strings;
  std::vector<std::string> tags;
  std::string error;

  bool null() override { return fail("null value"); }
  bool boolean(bool) override { return fail("boolean value"); }
  bool number_integer(number_integer_t v) override { return store(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return store(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override {
    bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                            [](char c) { return c >= '0' && c <= '9'; });
    return digits ? store(s) : fail("non-integer number");
  }
  bool string(string_t& v) override {
    if (depth_ == 2 && key_ == "tags") {
      tags.push_back(v);
      return true;
    }
    if (depth_ != 1) return fail("unexpected string");
    strings[key_] = v;
    return true;
  }
  bool binary(binary_t&) override { return fail("binary value"); }
  bool start_object(std::size_t) override {
    if (depth_ != 0) return fail("nested object");
    ++depth_;
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (depth_ != 1 || key_ != "tags") return fail("unexpected array");
    ++depth_;
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    return fail(ex.what());
  }

 private:
  bool store(const std::string& text) {
    if (depth_ != 1) return fail("unexpected number");
    integers[key_] = text;
    return true;
  }
  bool fail(const std::string& why) {
    error = why;
    return false;
  }
  int depth_ = 0;
  std::string key_;
};

}  // namespace

SolutionRecord from_jsonl(std::string_view line) {
  RecordSax sax;
  if (!nlohmann::json::sax_parse(line.begin(), line.end(), &sax)) {
    throw std::invalid_argument("bad record line: " + sax.error);
  }
  auto eq_it = sax.strings.find("eq");
  if (eq_it == sax.strings.end()) throw std::invalid_argument("record lacks \"eq\"");
  auto eq = parse_equation(eq_it->second);
  if (!eq) throw std::invalid_argument("unknown equation '" + eq_it->second + "'");
  SolutionRecord rec;
  rec.eq = *eq;
  auto get = [&](const char* name, bool required) -> std::optional<MPInt> {
    auto it = sax.integers.find(name);
    if (it == sax.integers.end()) {
      if (required) throw std::invalid_argument(std::string("record lacks \"") + name + "\"");
      return std::nullopt;
    }
    return mpint_from_string(it->second);
  };
  rec.b = get("b", false).value_or(0);
  rec.k = get("k", false).value_or(0);
  rec.x = *get("x", true);
  rec.y = *get("y", true);
  rec.z = *get("z", true);
  rec.t = get("t", false);
  for (const auto& tag : sax.tags) rec.add_tag(tag);
  return rec;
}

std::string csv_header() { return "eq,b,k,x,y,z,t,tags"; }

std::string to_csv(const SolutionRecord& rec) {
  std::string out(equation_name(rec.eq));
  for (const MPInt* v : {&rec.b, &rec.k, &rec.x, &rec.y, &rec.z}) out += ',' + to_string(*v);
  out += ',';
  if (rec.t) out += to_string(*rec.t);
  out += ',';
  for (std::size_t i = 0; i < rec.tags.size(); ++i) {
    if (i > 0) out += ';';
    out += rec.tags[i];
  }
  return out;
}

std::string format_records(const std::vector<SolutionRecord>& records, OutputFormat fmt) {
  std::string out;
  if (fmt == OutputFormat::csv) out += csv_header() + '\n';
  for (const auto& rec : records) {
    out += fmt == OutputFormat::csv ? to_csv(rec) : to_jsonl(rec);
    out += '\n';
  }
  return out;
}

}  // namespace blockprod
