#include "cli.hpp"

#include <algorithm>
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <string>

#include "crg/serialize.hpp"
#include "crg/svg.hpp"

namespace crg::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

const char* verdict_mark(bool holds) { return holds ? "holds" : "fails"; }

void print_group(std::ostream& out, const GroupSpec& w) {
  out << w.id.name() << "  (r=" << w.r() << ", p=" << w.p() << ", n=" << w.n() << ")\n";
  out << "expected Steinberg property: " << verdict_mark(w.expected_steinberg) << "\n";
  out << "linear generators:\n";
  for (const auto& g : w.linear_generators) out << "  " << to_text(g) << "\n";
  out << "lattice (rank " << w.lattice.rank() << "):\n";
  for (const auto& g : w.lattice.generators()) {
    out << "  " << to_text(g.coeffs) << " * " << to_text(g.v) << "\n";
  }
  if (w.counterexample) out << "counterexample: " << to_text(*w.counterexample) << "\n";
}

void print_families(std::ostream& out, const Arrangement& arr) {
  for (const auto& fam : arr.families()) {
    for (const auto& br : fam.branches) {
      out << "  " << to_text(fam.form) << " = c,  c in " << to_text(br.constants)
          << "  (eigenvalue " << to_text(br.eigenvalue) << ")\n";
    }
  }
}

void print_points(std::ostream& out, const char* label, const std::vector<CycloScalar>& pts) {
  out << label << " (" << pts.size() << "):";
  for (const auto& z : pts) out << "  " << to_text(z);
  out << "\n";
}

void print_sweep(std::ostream& out, const SweepReport& s) {
  out << s.id.name() << "  B=" << s.bound << (s.exhaustive ? " exhaustive" : " sampled")
      << "  |Lin|=" << s.linear_parts << "  rank=" << s.lattice_rank << "  grid="
      << std::setprecision(6) << static_cast<double>(s.grid_size) << "\n";
  out << "  examined " << s.examined << ", no fixed point " << s.no_fixed_point
      << ", reflection powers " << s.reflection_powers << ", on hyperplane " << s.on_hyperplane
      << ", violations " << s.violation_count << "\n";
  out << "  witnesses fired " << s.witness_fired << ", disagreements " << s.witness_disagreements
      << ", " << std::setprecision(3) << s.seconds << " s\n";
  const std::size_t shown = std::min<std::size_t>(s.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = s.violations[i];
    out << "  VIOLATION " << to_text(v.element) << "  fixed base " << to_text(v.fixed.base)
        << " dim " << v.fixed.dimension() << "\n";
  }
  if (s.violation_count > shown) {
    out << "  ... " << s.violation_count - shown << " more (--json lists the first " << s.violations.size()
        << ")\n";
  }
}

void print_certificate(std::ostream& out, const CounterexampleReport& c) {
  out << c.id.name() << ": " << (c.passed ? "pass" : "FAIL") << "\n";
  out << "  element " << to_text(c.element) << "\n";
  out << "  member " << (c.member ? "yes" : "no") << ", fixed point " << to_text(c.fixed.base)
      << " (dim " << c.fixed.dimension() << "), off arrangement " << (c.off_arrangement ? "yes" : "no")
      << "\n";
  if (c.orbit_check_applies) {
    out << "  coordinates pairwise orbit-inequivalent: " << (c.orbit_inequivalent ? "yes" : "no") << "\n";
  }
}

void print_table(std::ostream& out, const TableReport& t) {
  out << std::left;
  for (const auto& row : t.rows) {
    out << "  " << std::setw(20) << row.id.name() << std::setw(8) << to_string(row.expected)
        << std::setw(14) << to_string(row.computed) << std::setw(12) << row.method;
    for (const auto& s : row.sweeps) {
      out << " B=" << s.bound << (s.exhaustive ? "" : "~") << ":" << s.violation_count << "/" << s.examined;
    }
    if (row.extension) out << "  (extension)";
    if (row.mismatch()) out << "  MISMATCH";
    if (!row.error.empty()) out << "  " << row.error;
    out << "\n";
  }
  out << std::right << "mismatches " << t.mismatches() << ", witnesses fired " << t.witness_fired
      << ", disagreements " << t.witness_disagreements << ", " << std::setprecision(3) << t.seconds
      << " s\n";
}

bool usage_error(Errc code) {
  switch (code) {
    case Errc::UnknownGroup:
    case Errc::ParseError:
    case Errc::InvalidParameters:
    case Errc::NotRankOne:
    case Errc::TooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystallographic complex reflection groups G(r,p,n) x| Lambda", "crg"};
  app.require_subcommand(1);

  std::string group;
  int bound = 1;
  std::uint64_t budget = 0;
  std::uint64_t seed = SweepOptions{}.seed;
  unsigned jobs = 1;
  bool as_json = false;
  bool no_extensions = false;
  std::string window = "3";
  std::string out_path;

  auto add_group = [&group](CLI::App* sub) {
    sub->add_option("group", group, "group name, e.g. \"[G(6,3,2)]_2\" or G(2,1,3):a:3")->required();
  };
  auto add_json = [&as_json](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };

  auto* info = app.add_subcommand("info", "generators, lattice and expected verdict");
  add_group(info);
  add_json(info);

  auto* refl = app.add_subcommand("reflections", "reflecting-hyperplane families");
  add_group(refl);
  refl->add_option("-R,--window", window, "window radius for rank-1 point sets (rational)");
  add_json(refl);

  auto* check = app.add_subcommand("check", "sweep group elements for Steinberg violations");
  add_group(check);
  check->add_option("-B,--bound", bound, "translation box in lattice coordinates")->check(CLI::Range(0, 6));
  check->add_option("--budget", budget, "sample this many elements instead of the full grid");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  add_json(check);

  auto* cex = app.add_subcommand("counterexample", "certify the tabled counterexample");
  add_group(cex);
  add_json(cex);

  auto* table = app.add_subcommand("table", "reproduce the verdict table");
  table->add_option("-B,--bound", bound, "base translation box")->check(CLI::Range(1, 4));
  table->add_option("--budget", budget, "sample size for grids too large to exhaust");
  table->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  table->add_flag("--no-extensions", no_extensions, "skip the n = 3 rows beyond the minimal dimension");
  add_json(table);

  auto* plot = app.add_subcommand("plot", "SVG of a rank-1 lattice and its hyperplanes");
  add_group(plot);
  plot->add_option("-R,--window", window, "window radius (rational)");
  plot->add_option("--out", out_path, "SVG path (stdout when absent)");

  auto* catalog = app.add_subcommand("catalog", "list catalog rows");
  add_json(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) {
      const GroupSpec w = build_group(parse_group_id(group));
      if (as_json) {
        out << to_json(w).dump(2) << "\n";
      } else {
        print_group(out, w);
      }
      return kOk;
    }

    if (*refl) {
      const Arrangement arr(build_group(parse_group_id(group)));
      std::optional<Rank1Window> win;
      if (arr.group().n() == 1 && !arr.group().lattice.uses_alpha()) {
        win = rank1_window(arr.group(), Rational::parse(window));
      }
      if (as_json) {
        json j = {{"id", arr.group().id.name()}, {"families", families_json(arr)}};
        j["window"] = win ? to_json(*win) : json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << arr.group().id.name() << ": " << arr.families().size() << " families\n";
        print_families(out, arr);
        if (win) {
          out << "window R=" << window << "\n";
          print_points(out, "lattice points", win->lattice_points);
          print_points(out, "hyperplane points", win->hyperplane_points);
        }
      }
      return kOk;
    }

    if (*check) {
      const Arrangement arr(build_group(parse_group_id(group)));
      SweepOptions opts;
      opts.bound = bound;
      if (budget > 0) opts.budget = budget;
      opts.seed = seed;
      opts.jobs = jobs;
      const SweepReport s = sweep(arr, opts);
      if (as_json) {
        out << to_json(s).dump(2) << "\n";
      } else {
        print_sweep(out, s);
      }
      const bool found = s.violation_count > 0;
      const bool agrees = arr.group().expected_steinberg ? !found : found;
      if (!agrees) {
        err << (found ? "violations found for a group expected to satisfy the property\n"
                      : "no violation found for a group expected to fail the property\n");
      }
      return agrees && s.witness_disagreements == 0 ? kOk : kMismatch;
    }

    if (*cex) {
      const GroupId id = parse_group_id(group);
      try {
        const CounterexampleReport c = check_counterexample(id);
        if (as_json) {
          out << to_json(c).dump(2) << "\n";
        } else {
          print_certificate(out, c);
        }
        return c.passed ? kOk : kMismatch;
      } catch (const Error& e) {
        if (e.code() != Errc::ExpectedPositiveGroup && e.code() != Errc::CounterexampleRejected) throw;
        err << e.what() << "\n";
        return kMismatch;
      }
    }

    if (*table) {
      TableOptions opts;
      opts.bound = bound;
      opts.jobs = jobs;
      opts.include_extensions = !no_extensions;
      if (budget > 0) opts.sample_budget = budget;
      const TableReport t = full_table_report(opts);
      if (as_json) {
        out << to_json(t).dump(2) << "\n";
      } else {
        print_table(out, t);
      }
      return t.mismatches() == 0 && t.witness_disagreements == 0 ? kOk : kMismatch;
    }

    if (*plot) {
      const GroupSpec w = build_group(parse_group_id(group));
      const std::string svg = render_svg(rank1_window(w, Rational::parse(window)));
      if (out_path.empty()) {
        out << svg;
      } else {
        std::ofstream f(out_path);
        if (!f) {
          err << "cannot write " << out_path << "\n";
          return kUsage;
        }
        f << svg;
      }
      return kOk;
    }

    if (*catalog) {
      if (as_json) {
        out << catalog_json().dump(2) << "\n";
      } else {
        for (const auto& id : catalog_rows()) {
          out << std::left << std::setw(20) << id.name() << verdict_mark(build_group(id).expected_steinberg)
              << "\n";
        }
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage_error(e.code()) ? kUsage : kMismatch;
  }
  return kUsage;
}

}  // namespace crg::cli
