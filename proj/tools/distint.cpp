#include "distint/corpus.hpp"
#include "distint/errors.hpp"
#include "distint/familygen.hpp"
#include "distint/integrality.hpp"
#include "distint/jsonutil.hpp"
#include "distint/model.hpp"
#include "distint/oracle.hpp"
#include "distint/search.hpp"
#include "distint/spectral.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace distint;

enum class Format { Table, Csv, Json };

Format resolve_format(const std::string& requested) {
  if (requested == "table") return Format::Table;
  if (requested == "csv") return Format::Csv;
  if (requested == "json") return Format::Json;
  // default: table for terminals, json for pipes
  return isatty(fileno(stdout)) ? Format::Table : Format::Json;
}

void add_format_option(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
}

std::vector<BigInt> parse_big_list(const std::string& text,
                                   const std::string& flag) {
  std::vector<BigInt> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty())
      throw ParseError("empty value in " + flag + " list '" + text + "'");
    try {
      out.emplace_back(cur);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + cur + "' in " + flag);
    }
    cur.clear();
  };
  for (const char c : text) {
    if (c == ',')
      flush();
    else if (c != ' ')
      cur.push_back(c);
  }
  flush();
  return out;
}

std::string entry_text(const SpectrumEntry& e) {
  if (e.exact) return e.value.str();
  return "(" + rational_to_string(e.lo) + "," + rational_to_string(e.hi) + ")";
}

unsigned default_workers() {
  if (const char* env = std::getenv("DISTINT_WORKERS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

int cmd_spectrum(const std::string& spec_text, Format format) {
  const PartitionSpec spec = parse_spec(spec_text);
  const DSpectrum sp = spectrum(spec);
  switch (format) {
    case Format::Table: {
      for (std::size_t i = 0; i < sp.entries.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << entry_text(sp.entries[i]) << ':'
                  << sp.entries[i].multiplicity.str();
      }
      std::cout << '\n'
                << (sp.integral ? "distance integral"
                                : "not distance integral")
                << '\n';
      break;
    }
    case Format::Csv: {
      std::cout << "value,lo,hi,multiplicity\n";
      for (const auto& e : sp.entries) {
        if (e.exact)
          std::cout << e.value.str() << ",,";
        else
          std::cout << ',' << rational_to_string(e.lo) << ','
                    << rational_to_string(e.hi);
        std::cout << ',' << e.multiplicity.str() << '\n';
      }
      break;
    }
    case Format::Json: {
      json j{{"spec", format_spec(spec)},
             {"n", big_to_json(spec.n)},
             {"part_count", big_to_json(spec.part_count)},
             {"spectrum", spectrum_to_json(sp)}};
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

int cmd_check(const std::string& spec_text, Format format) {
  const PartitionSpec spec = parse_spec(spec_text);
  const IntegralityReport rep = is_distance_integral(spec);
  const auto roots = nontrivial_roots(spec);
  switch (format) {
    case Format::Table: {
      if (rep.integral) {
        std::cout << "distance integral; mu =";
        for (const auto& m : rep.mu) std::cout << ' ' << m.str();
        std::cout << '\n';
      } else {
        std::cout << "not distance integral; non-trivial roots:";
        for (const auto& r : roots) std::cout << ' ' << entry_text(r);
        std::cout << '\n';
      }
      break;
    }
    case Format::Csv: {
      std::cout << "integral,k,value,lo,hi\n";
      for (std::size_t k = 0; k < roots.size(); ++k) {
        std::cout << (rep.integral ? "true" : "false") << ',' << k + 1 << ',';
        if (roots[k].exact)
          std::cout << roots[k].value.str() << ",,";
        else
          std::cout << ',' << rational_to_string(roots[k].lo) << ','
                    << rational_to_string(roots[k].hi);
        std::cout << '\n';
      }
      break;
    }
    case Format::Json: {
      json jroots = json::array();
      for (const auto& r : roots) {
        if (r.exact)
          jroots.push_back(json{{"value", big_to_json(r.value)}});
        else
          jroots.push_back(json{{"interval",
                                 {rational_to_string(r.lo),
                                  rational_to_string(r.hi)}}});
      }
      json j{{"spec", format_spec(spec)},
             {"integral", rep.integral},
             {"roots", std::move(jroots)}};
      if (rep.integral) j["mu"] = vec_to_json(rep.mu);
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return rep.integral ? 0 : 1;
}

int emit_errata(Format format) {
  auto entries = load_corpus();
  const ErrataReport report = run_errata_report(entries);
  switch (format) {
    case Format::Table:
      std::cout << to_text(report);
      break;
    case Format::Csv: {
      std::cout << "source,status,notes\n";
      for (const auto& e : report.entries) {
        std::string notes;
        for (const auto& n : e.notes)
          notes += (notes.empty() ? "" : "; ") + n;
        std::cout << '"' << e.source << "\"," << e.status << ",\"" << notes
                  << "\"\n";
      }
      break;
    }
    case Format::Json: {
      json jentries = json::array();
      for (const auto& e : report.entries)
        jentries.push_back(
            json{{"source", e.source}, {"status", e.status}, {"notes", e.notes}});
      json j{{"entries", std::move(jentries)},
             {"rows", report.rows},
             {"families", report.families},
             {"verified", report.verified},
             {"discrepant", report.discrepant}};
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return report.clean() ? 0 : 1;
}

struct VerifyArgs {
  bool corpus = false;
  std::string p, a, mu, n;
  bool oracle = false;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

int cmd_verify(const VerifyArgs& args, Format format) {
  if (args.corpus) return emit_errata(format);

  SolutionRow row = make_row(parse_big_list(args.p, "--p"),
                             parse_big_list(args.a, "--a"),
                             parse_big_list(args.mu, "--mu"));
  if (!args.n.empty()) row.n = BigInt(args.n);
  VerificationReport report = verify_row(row);
  if (args.oracle) {
    CheckResult extra{"matrix-crosscheck", false, ""};
    try {
      extra.pass = cross_check(make_spec(row.p, row.a), args.oracle_limit);
      if (!extra.pass)
        extra.detail = "factored and dense characteristic polynomials differ";
    } catch (const std::exception& e) {
      extra.detail = e.what();
    }
    report.checks.push_back(std::move(extra));
  }

  switch (format) {
    case Format::Table:
      std::cout << to_text(report);
      break;
    case Format::Csv:
      std::cout << "check,pass,detail\n";
      for (const auto& c : report.checks)
        std::cout << c.name << ',' << (c.pass ? "true" : "false") << ",\""
                  << c.detail << "\"\n";
      break;
    case Format::Json:
      std::cout << report_to_json(report).dump() << '\n';
      break;
  }
  return report.all_pass() ? 0 : 1;
}

struct FamilyArgs {
  std::string p, mu;
  bool emit_formulas = false;
  std::string t;
};

int cmd_family(const FamilyArgs& args, Format format) {
  const FamilyParams fam =
      family_params(parse_big_list(args.p, "--p"), parse_big_list(args.mu, "--mu"));

  if (args.emit_formulas) {
    std::cout << format_formulas(fam);
    if (!args.t.empty()) {
      const auto [spec, mu] = instantiate(fam, BigInt(args.t));
      std::cout << "t = " << args.t << ": " << format_spec(spec) << '\n';
    }
    return 0;
  }

  switch (format) {
    case Format::Table: {
      std::cout << "step = " << fam.step.str() << '\n';
      std::cout << "k size d r slope intercept\n";
      for (std::size_t k = 0; k < fam.s(); ++k)
        std::cout << k + 1 << ' ' << fam.p[k].str() << ' ' << fam.d[k].str()
                  << ' ' << fam.r[k].str() << ' ' << fam.slope[k].str() << ' '
                  << fam.intercept[k].str() << '\n';
      break;
    }
    case Format::Csv: {
      std::cout << "k,size,d,r,slope,intercept\n";
      for (std::size_t k = 0; k < fam.s(); ++k)
        std::cout << k + 1 << ',' << fam.p[k].str() << ',' << fam.d[k].str()
                  << ',' << fam.r[k].str() << ',' << fam.slope[k].str() << ','
                  << fam.intercept[k].str() << '\n';
      break;
    }
    case Format::Json:
      std::cout << family_to_json(fam).dump() << '\n';
      break;
  }

  if (!args.t.empty()) {
    const auto [spec, mu] = instantiate(fam, BigInt(args.t));
    if (format == Format::Json) {
      json j{{"t", args.t},
             {"spec", format_spec(spec)},
             {"n", big_to_json(spec.n)},
             {"mu", vec_to_json(mu)}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "t = " << args.t << ": " << format_spec(spec) << " mu =";
      for (const auto& m : mu) std::cout << ' ' << m.str();
      std::cout << '\n';
    }
  }
  return 0;
}

struct SearchArgs {
  std::size_t s = 0;
  std::string pmin, pmax, mumax, nmax;
  std::uint64_t limit = 0;
  unsigned workers = 0;
  std::string resume;
  std::uint64_t budget = kDefaultSearchBudget;
  bool force = false;
};

int cmd_search(const SearchArgs& args, Format format) {
  SearchBounds bounds;
  bounds.hi = parse_big_list(args.pmax, "--pmax");
  const std::size_t s = args.s ? args.s : bounds.hi.size();
  if (bounds.hi.size() != s)
    throw ParseError("--pmax holds " + std::to_string(bounds.hi.size()) +
                     " entries but --s is " + std::to_string(s));
  if (args.pmin.empty())
    bounds.lo.assign(s, 1);
  else
    bounds.lo = parse_big_list(args.pmin, "--pmin");
  bounds.mu_max = BigInt(args.mumax);
  if (!args.nmax.empty()) bounds.n_max = BigInt(args.nmax);
  if (args.limit) bounds.row_limit = args.limit;

  SearchOptions options;
  options.workers = args.workers ? args.workers : default_workers();
  options.budget = args.budget;
  options.force = args.force;
  options.resume_path = args.resume;
  options.progress = [](std::uint64_t units, std::uint64_t rows) {
    std::cerr << "progress: " << units << " units, " << rows << " rows\n";
  };

  const std::size_t cols = s;
  bool header_done = false;
  auto emit = [&](const SolutionRow& row) {
    switch (format) {
      case Format::Table: {
        if (!header_done) {
          header_done = true;
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << std::setw(8) << ("p" + std::to_string(i + 1));
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << std::setw(10) << ("a" + std::to_string(i + 1));
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << std::setw(12) << ("mu" + std::to_string(i + 1));
          std::cout << std::setw(12) << "n" << '\n';
        }
        for (const auto& v : row.p) std::cout << std::setw(8) << v.str();
        for (const auto& v : row.a) std::cout << std::setw(10) << v.str();
        for (const auto& v : row.mu) std::cout << std::setw(12) << v.str();
        std::cout << std::setw(12) << row.n.str() << '\n';
        break;
      }
      case Format::Csv: {
        if (!header_done) {
          header_done = true;
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << "p" << i + 1 << ',';
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << "a" << i + 1 << ',';
          for (std::size_t i = 0; i < cols; ++i)
            std::cout << "mu" << i + 1 << ',';
          std::cout << "n,part_count\n";
        }
        for (const auto& v : row.p) std::cout << v.str() << ',';
        for (const auto& v : row.a) std::cout << v.str() << ',';
        for (const auto& v : row.mu) std::cout << v.str() << ',';
        std::cout << row.n.str() << ',' << row.part_count.str() << '\n';
        break;
      }
      case Format::Json:
        std::cout << row_to_json(row).dump() << '\n';
        break;
    }
  };

  const SearchStats stats = search(bounds, options, emit);
  std::cerr << "search done: " << stats.units << " units, " << stats.rows
            << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distance spectra of complete multipartite graphs"};
  app.require_subcommand(1);
  std::string format_name = "auto";
  int exit_code = 0;

  auto* sp = app.add_subcommand(
      "spectrum", "full distance spectrum of a partition, exact");
  std::string sp_spec;
  sp->add_option("spec", sp_spec,
                 "partition, grouped 'a1xp1,a2xp2,...' or plain 'p1,p2,...'")
      ->required();
  add_format_option(sp, format_name);
  sp->callback(
      [&] { exit_code = cmd_spectrum(sp_spec, resolve_format(format_name)); });

  auto* ck = app.add_subcommand("check",
                                "decide distance integrality of a partition");
  std::string ck_spec;
  ck->add_option("spec", ck_spec, "partition description")->required();
  add_format_option(ck, format_name);
  ck->callback(
      [&] { exit_code = cmd_check(ck_spec, resolve_format(format_name)); });

  auto* vf = app.add_subcommand(
      "verify", "re-derive a solution row, or the whole bundled corpus");
  VerifyArgs vf_args;
  vf->add_flag("--corpus", vf_args.corpus,
               "verify every bundled corpus entry");
  vf->add_option("--p", vf_args.p, "part sizes, comma separated");
  vf->add_option("--a", vf_args.a, "part counts, comma separated");
  vf->add_option("--mu", vf_args.mu, "claimed eigenvalues, comma separated");
  vf->add_option("--n", vf_args.n, "claimed vertex count (default: derived)");
  vf->add_flag("--oracle", vf_args.oracle,
               "also cross-check against the dense matrix");
  vf->add_option("--oracle-limit", vf_args.oracle_limit,
                 "dense matrix size ceiling");
  add_format_option(vf, format_name);
  vf->callback([&] {
    if (!vf_args.corpus &&
        (vf_args.p.empty() || vf_args.a.empty() || vf_args.mu.empty()))
      throw CLI::ValidationError(
          "verify needs either --corpus or all of --p, --a, --mu");
    exit_code = cmd_verify(vf_args, resolve_format(format_name));
  });

  auto* fa = app.add_subcommand(
      "family", "derive the one-parameter family through a base solution");
  FamilyArgs fa_args;
  fa->add_option("--p", fa_args.p, "part sizes")->required();
  fa->add_option("--mu", fa_args.mu, "base eigenvalues")->required();
  fa->add_flag("--emit-formulas", fa_args.emit_formulas,
               "print the affine count formulas");
  fa->add_option("--t", fa_args.t, "also instantiate the member at this t");
  add_format_option(fa, format_name);
  fa->callback(
      [&] { exit_code = cmd_family(fa_args, resolve_format(format_name)); });

  auto* se = app.add_subcommand(
      "search", "enumerate all solutions in a bounded box");
  SearchArgs se_args;
  se->add_option("--s", se_args.s, "number of distinct part sizes");
  se->add_option("--pmin", se_args.pmin, "size lower bounds (default all 1)");
  se->add_option("--pmax", se_args.pmax, "size upper bounds")->required();
  se->add_option("--mumax", se_args.mumax, "largest eigenvalue, inclusive")
      ->required();
  se->add_option("--nmax", se_args.nmax, "cap on the vertex count");
  se->add_option("--limit", se_args.limit, "stop after this many rows");
  se->add_option("--workers", se_args.workers,
                 "worker threads (default: DISTINT_WORKERS or 1)");
  se->add_option("--resume", se_args.resume,
                 "checkpoint file to resume from and keep updating");
  se->add_option("--budget", se_args.budget,
                 "candidate estimate allowed before refusing");
  se->add_flag("--force", se_args.force, "run even over the budget");
  add_format_option(se, format_name);
  se->callback(
      [&] { exit_code = cmd_search(se_args, resolve_format(format_name)); });

  auto* er = app.add_subcommand(
      "errata", "compare every bundled published value against re-derivation");
  add_format_option(er, format_name);
  er->callback([&] { exit_code = emit_errata(resolve_format(format_name)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const NotIntegralBase& e) {
    // a well-formed request whose answer is "no": distinct from usage errors
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BoundsTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
