#include "blockprod/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "blockprod/errors.hpp"
#include "blockprod/golden.hpp"
#include "blockprod/identities.hpp"
#include "blockprod/pellfam.hpp"
#include "blockprod/runge.hpp"
#include "blockprod/search.hpp"

namespace blockprod {

namespace {

struct Common {
  unsigned jobs = 0;
  std::string out_path;
  std::string format = "jsonl";
  bool no_prefilter = false;
};

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("BLOCKPROD_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

SearchOptions options_of(const Common& c) {
  SearchOptions o;
  o.jobs = resolve_jobs(c.jobs);
  o.prefilter = !c.no_prefilter;
  return o;
}

void add_common(CLI::App* app, Common& c, bool with_output) {
  app->add_option("--jobs", c.jobs, "worker threads (default: all cores; BLOCKPROD_JOBS overrides)");
  app->add_flag("--no-prefilter", c.no_prefilter, "disable residue prefilters");
  if (with_output) {
    app->add_option("--out", c.out_path, "write records to this file instead of stdout");
    app->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  }
}

void emit_records(const std::vector<SolutionRecord>& recs, const Common& c, std::ostream& out) {
  auto fmt = c.format == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
  std::string text = format_records(recs, fmt);
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error("cannot open " + c.out_path);
  file << text;
}

MPInt parse_mp(const std::string& s) { return mpint_from_string(s); }

std::string poly_line(const PolyAssignment& values) {
  std::string line;
  for (const auto& [name, poly] : values) line += '\t' + name + '=' + poly.to_string();
  return line;
}

int report_diff(const GoldenDiff& diff, GoldenId id, std::size_t actual, std::ostream& out) {
  for (const auto& l : diff.lines()) out << l << '\n';
  out << golden_name(id) << ": " << actual << " found, " << golden_table(id).rows.size() << " expected, "
      << diff.missing.size() << " missing, " << diff.unexpected.size() << " unexpected: "
      << (diff.empty() ? "OK" : "MISMATCH") << '\n';
  return diff.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Products of disjoint blocks of consecutive integers", "blockprod"};
  app.require_subcommand(1);
  Common common;
  int code = kExitOk;

  // family
  auto* family = app.add_subcommand("family", "Pell-recurrence polynomial families");
  family->require_subcommand(1);
  std::string fam_id;
  std::size_t fam_n = 8;
  auto* fam_dump = family->add_subcommand("dump", "print the first solutions of one family");
  fam_dump->add_option("--id", fam_id, "family id")->required();
  fam_dump->add_option("-n,--n", fam_n, "highest solution index")->check(CLI::Range(0, 64));
  auto* fam_verify = family->add_subcommand("verify", "check invariants, parity and equations");
  fam_verify->add_option("--id", fam_id, "family id (default: all)");
  fam_verify->add_option("-n,--n", fam_n, "highest solution index")->check(CLI::Range(0, 64));

  // identities
  auto* identities = app.add_subcommand("identities", "explicit parametric families");
  identities->require_subcommand(1);
  std::string ident_eq;
  auto* ident_verify = identities->add_subcommand("verify", "verify explicit families");
  ident_verify->add_option("--eq", ident_eq, "restrict to one equation");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Runge search bounds");
  bounds->require_subcommand(1);
  std::string bb, bk;
  auto* bounds_z2 = bounds->add_subcommand("z2", "bounds for the square equation");
  bounds_z2->add_option("--b", bb)->required();
  bounds_z2->add_option("--k", bk)->required();
  auto* bounds_z3 = bounds->add_subcommand("z3", "bound for the b = 1 cube-type equation");
  bounds_z3->add_option("--k", bk)->required();

  // search
  auto* search = app.add_subcommand("search", "bounded exhaustive searches");
  search->require_subcommand(1);
  std::vector<std::string> s_b;
  std::string s_kmin = "4", s_kmax, s_xmax, s_ymax, s_nmax;
  auto* s_z2 = search->add_subcommand("z2", "(x-b)x(x+b)(y-b)y(y+b) = z^2");
  s_z2->add_option("--b", s_b, "b values (repeatable or comma separated)")->required()->delimiter(',');
  s_z2->add_option("--k-max", s_kmax)->required();
  add_common(s_z2, common, true);
  auto* s_z3 = search->add_subcommand("z3", "(x-1)x(x+1)(y-1)y(y+1) = (z-1)z(z+1)");
  s_z3->add_option("--k-min", s_kmin);
  s_z3->add_option("--k-max", s_kmax)->required();
  add_common(s_z3, common, true);
  auto* s_ratio = search->add_subcommand("ratio", "x(x+1)(x+2) = z^2 y(y+1)(y+2)");
  s_ratio->add_option("--x-max", s_xmax)->required();
  s_ratio->add_option("--y-max", s_ymax)->required();
  add_common(s_ratio, common, true);
  auto* s_pair = search->add_subcommand("paircube", "x(x+1)y(y+1) = z^3");
  s_pair->add_option("--y-max", s_ymax)->required();
  add_common(s_pair, common, true);
  auto* s_triple = search->add_subcommand("triplecube", "x(x+1)y(y+1)z(z+1) = t^3");
  s_triple->add_option("--n-max", s_nmax)->required();
  add_common(s_triple, common, true);

  // check
  auto* check = app.add_subcommand("check", "compare searches with the embedded tables");
  check->require_subcommand(1);
  auto* c_t1 = check->add_subcommand("table1", "square equation, odd 3 <= b <= 13, 2b < k <= 300");
  add_common(c_t1, common, false);
  auto* c_t2 = check->add_subcommand("table2", "ratio equation, x < 200000, y < 400");
  add_common(c_t2, common, false);
  auto* c_pc = check->add_subcommand("paircube3", "pair-cube equation, x <= y <= 10000");
  add_common(c_pc, common, false);
  auto* c_fib = check->add_subcommand("fib", "cube-type equation, 4 <= k <= 5000");
  add_common(c_fib, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    // Help for the innermost subcommand that was reached.
    const CLI::App* scope = &app;
    for (bool deeper = true; deeper;) {
      deeper = false;
      for (const auto* sub : scope->get_subcommands()) {
        scope = sub;
        deeper = true;
        break;
      }
    }
    err << scope->help();
    return kExitUsage;
  }

  try {
    if (fam_dump->parsed()) {
      const PellFamily& fam = find_family(fam_id);
      for (const auto& sol : generate_solutions(fam, fam_n + 1)) {
        out << "n=" << sol.index << poly_line(sol.values) << (sol.degenerate ? "\tdegenerate" : "") << '\n';
      }
    } else if (fam_verify->parsed()) {
      std::vector<const PellFamily*> fams;
      if (fam_id.empty()) {
        for (const auto& f : family_catalog()) fams.push_back(&f);
      } else {
        fams.push_back(&find_family(fam_id));
      }
      for (const auto* fam : fams) {
        std::string status = "PASS";
        try {
          auto pairs = pell_generate(*fam, fam_n + 1);
          for (std::size_t n = 0; n < pairs.size(); ++n) {
            if (!pell_defect(*fam, pairs[n]).is_zero()) throw InvariantViolation("Pell invariant");
            if (passes_index_filter(*fam, n)) check_parity(*fam, pairs[n], n);
          }
          generate_solutions(*fam, fam_n + 1);
        } catch (const Error& e) {
          status = std::string("FAIL ") + e.what();
          code = kExitMismatch;
        }
        out << fam->id << '\t' << status << '\n';
      }
      if (fam_id.empty() || fam_id == "mult_first") {
        std::string status = "PASS";
        try {
          mult_chain(fam_n + 1);
        } catch (const Error& e) {
          status = std::string("FAIL ") + e.what();
          code = kExitMismatch;
        }
        out << "mult_chain" << '\t' << status << '\n';
      }
    } else if (ident_verify->parsed()) {
      std::vector<ExplicitFamily> fams;
      if (ident_eq.empty()) {
        fams = all_explicit_families();
      } else {
        auto eq = parse_equation(ident_eq);
        if (!eq) {
          err << "error: unknown equation '" << ident_eq << "'\n";
          return kExitUsage;
        }
        fams = explicit_families(*eq);
      }
      for (const auto& f : fams) {
        bool ok = verify_family(f);
        if (!ok) code = kExitMismatch;
        out << equation_name(f.equation) << '\t' << f.label << '\t' << (ok ? "PASS" : "FAIL") << '\n';
      }
      bool ok = aux_identity_check().holds();
      if (ident_eq.empty() || ident_eq == "z2") {
        if (!ok) code = kExitMismatch;
        out << "z2\taux_cubics\t" << (ok ? "PASS" : "FAIL") << '\n';
      }
    } else if (bounds_z2->parsed()) {
      BoundSet bs = z2_bounds(parse_mp(bb), parse_mp(bk));
      nlohmann::ordered_json j;
      j["b"] = nlohmann::ordered_json::parse(to_string(bs.b));
      j["k"] = nlohmann::ordered_json::parse(to_string(bs.k));
      j["B1"] = static_cast<double>(bs.B1);
      j["B2"] = static_cast<double>(bs.B2);
      j["B3"] = static_cast<double>(bs.B3);
      j["bound"] = nlohmann::ordered_json::parse(to_string(bs.Bmax));
      auto& cands = j["exact_candidates"] = nlohmann::ordered_json::array();
      for (const auto& x : bs.exact_candidates) cands.push_back(nlohmann::ordered_json::parse(to_string(x)));
      out << j.dump() << '\n';
    } else if (bounds_z3->parsed()) {
      MPInt k = parse_mp(bk);
      nlohmann::ordered_json j;
      j["k"] = nlohmann::ordered_json::parse(to_string(k));
      j["bound_real"] = static_cast<double>(fib_bound_real(k));
      j["bound"] = nlohmann::ordered_json::parse(to_string(fib_bound(k)));
      out << j.dump() << '\n';
    } else if (s_z2->parsed()) {
      std::vector<MPInt> bs;
      for (const auto& b : s_b) bs.push_back(parse_mp(b));
      emit_records(search_z2(bs, parse_mp(s_kmax), options_of(common)), common, out);
    } else if (s_z3->parsed()) {
      emit_records(search_z3_b1(parse_mp(s_kmin), parse_mp(s_kmax), options_of(common)), common, out);
    } else if (s_ratio->parsed()) {
      emit_records(search_ratio(parse_mp(s_xmax), parse_mp(s_ymax), options_of(common)), common, out);
    } else if (s_pair->parsed()) {
      emit_records(search_pair_cube(parse_mp(s_ymax), options_of(common)), common, out);
    } else if (s_triple->parsed()) {
      auto res = search_triple_cube(parse_mp(s_nmax), options_of(common));
      if (!common.out_path.empty()) emit_records(res.records, common, out);
      out << "{\"count\":" << res.count << "}\n";
    } else if (c_t1->parsed()) {
      std::vector<MPInt> bs{3, 5, 7, 9, 11, 13};
      auto recs = search_z2(bs, 300, options_of(common));
      code = report_diff(golden_compare(recs, golden_table(GoldenId::table1)), GoldenId::table1, recs.size(), out);
    } else if (c_t2->parsed()) {
      auto recs = search_ratio(199999, 399, options_of(common));
      code = report_diff(golden_compare(recs, golden_table(GoldenId::table2)), GoldenId::table2, recs.size(), out);
    } else if (c_pc->parsed()) {
      auto recs = search_pair_cube(10000, options_of(common));
      code = report_diff(golden_compare(recs, golden_table(GoldenId::paircube3)), GoldenId::paircube3, recs.size(),
                         out);
    } else if (c_fib->parsed()) {
      auto recs = search_z3_b1(4, 5000, options_of(common));
      for (const auto& r : recs) {
        if (!r.has_tag("fibonacci")) out << "untagged " << to_jsonl(r) << '\n';
      }
      code = report_diff(golden_compare(recs, golden_table(GoldenId::fibcorollary)), GoldenId::fibcorollary,
                         recs.size(), out);
      for (const auto& r : recs) {
        if (!r.has_tag("fibonacci")) code = kExitMismatch;
      }
    }
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  out.flush();
  return code;
}

}  // namespace blockprod
