#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blockprod/cli.hpp"
#include "blockprod/errors.hpp"
#include "blockprod/identities.hpp"
#include "blockprod/pellfam.hpp"
#include "blockprod/runge.hpp"
#include "blockprod/search.hpp"

using namespace blockprod;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome cli(const std::vector<std::string>& args, const std::string& expect_in_output = "") {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  std::string text = out.str();
  bool ok = code == 0 && (expect_in_output.empty() || text.find(expect_in_output) != std::string::npos);
  std::string last = text;
  while (!last.empty() && last.back() == '\n') last.pop_back();
  if (auto pos = last.rfind('\n'); pos != std::string::npos) last = last.substr(pos + 1);
  return {ok, "exit " + std::to_string(code) + ", " + last + err.str()};
}

Outcome table1() { return cli({"check", "table1"}); }
Outcome fib() { return cli({"check", "fib"}); }
Outcome table2() { return cli({"check", "table2"}); }
Outcome paircube() { return cli({"check", "paircube3"}); }

Outcome triplecube() {
  Outcome main = cli({"search", "triplecube", "--n-max", "5000"}, "{\"count\":88}");
  long naive = 0;
  const long n = 150;
  for (long x = 1; x <= n; ++x)
    for (long y = x + 2; y <= n; ++y)
      for (long z = y + 2; z <= n; ++z) naive += exact_cbrt(MPInt(x * (x + 1)) * (y * (y + 1)) * (z * (z + 1))).has_value();
  std::size_t fast = search_triple_cube(n).count;
  bool cross = static_cast<long>(fast) == naive;
  return {main.ok && cross, main.detail + "; n_max=150: index " + std::to_string(fast) + ", naive " + std::to_string(naive)};
}

Outcome symbolic() {
  long checks = 0;
  std::string failure;
  try {
    for (const auto& fam : family_catalog()) {
      auto pairs = pell_generate(fam, 9);
      for (std::size_t n = 0; n < pairs.size(); ++n) {
        if (!pell_defect(fam, pairs[n]).is_zero()) throw InvariantViolation(fam.id + " Pell invariant");
        if (passes_index_filter(fam, n)) check_parity(fam, pairs[n], n);
        ++checks;
      }
      checks += generate_solutions(fam, 9).size();
    }
    checks += mult_chain(9).size();
    for (const auto& f : all_explicit_families()) {
      if (!verify_family(f)) throw EquationMismatch(f.label);
      ++checks;
    }
    if (!aux_identity_check().holds()) throw EquationMismatch("auxiliary cubics");
    ++checks;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  return {failure.empty(), std::to_string(checks) + " exact checks" + (failure.empty() ? "" : ", failed: " + failure)};
}

Outcome bounds() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> pick_b(1, 13), pick_k(1, 300), pick_dx(1, 1000);
  long z2_bad = 0, z3_bad = 0, z2_n = 0, z3_n = 0;
  for (int i = 0; i < 200; ++i) {
    long b = pick_b(rng), k = pick_k(rng);
    MPInt top = z2_bounds(b, k).Bmax;
    for (int j = 0; j < 50; ++j, ++z2_n) z2_bad += !z2_straddles(b, k, top + pick_dx(rng));
  }
  for (long k = 4; k <= 200; ++k) {
    MPInt top = fib_bound(k);
    for (long dx = 1; dx <= 1000; ++dx, ++z3_n) z3_bad += !z3_cube_straddles(k, top + dx);
  }
  return {z2_bad == 0 && z3_bad == 0, "square straddle " + std::to_string(z2_bad) + "/" + std::to_string(z2_n) +
                                          " violations, cube straddle " + std::to_string(z3_bad) + "/" +
                                          std::to_string(z3_n) + " violations"};
}

Outcome fujiwara() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> pick(-50, 50);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    long r1 = pick(rng), r2 = pick(rng), r3 = pick(rng);
    std::vector<MPInt> c{MPInt(-r1 * r2 * r3), MPInt(r1 * r2 + r1 * r3 + r2 * r3), MPInt(-(r1 + r2 + r3)), MPInt(1)};
    long top = std::max({std::labs(r1), std::labs(r2), std::labs(r3)});
    bad += fujiwara_bound(c) < top || fujiwara_bound_floor(c) < top;
  }
  return {bad == 0, std::to_string(bad) + "/100 cubics violate the bound"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table1 reproduction", table1},
      {"fibonacci corollary", fib},
      {"table2 reproduction", table2},
      {"pair-cube solutions", paircube},
      {"triple-cube count", triplecube},
      {"symbolic suite", symbolic},
      {"bound soundness", bounds},
      {"fujiwara property", fujiwara},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("%s  %-22s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
