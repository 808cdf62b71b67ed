// gvkit: exact Gromov-Witten / BPS toolkit.
//
// Subcommands: elem (elementary-cluster series), bps (forward/inverse BPS
// transform), solve (count extraction + reassembly + cross-check), check
// (local integrality/vanishing report), fano (positive-c1 transform), am
// (genus-zero multiple-cover transform), dim (expected dimension).
//
// Artifacts and reports are JSON on stdout unless --out is given; identical
// inputs and flags produce byte-identical output.  Errors exit 2 with a
// machine-readable object on stderr; report-level violations exit 1.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gvkit/json_io.hpp"

namespace {

using namespace gvkit;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    fail(ErrorKind::DomainError, "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    fail(ErrorKind::DomainError, "cannot open output file '" + path + "'");
  f << text;
}

// Series artifacts always land somewhere (--out or stdout); reports honor
// --quiet when they would land on stdout.
void emit_artifact(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << dump_json(j);
  else
    write_file(out_path, dump_json(j));
}

void emit_report(const Json& j, const std::string& out_path, bool quiet) {
  if (!out_path.empty())
    write_file(out_path, dump_json(j));
  else if (!quiet)
    std::cout << dump_json(j);
}

struct Options {
  std::string in_path;
  std::string out_path;
  bool quiet = false;
  bool invert = false;
  bool log = false;
  int genus = 0;
  int qdeg = 0;
  int gmax = -1;
  int insertions = 0;
  int dimx = 6;
  std::int64_t t_order = -1;
  std::int64_t c1a = 0;
  std::string backend = "q";
  std::string energy;
  std::vector<int> dims;
};

int run_elem(const Options& o, const ThreadPolicy& policy) {
  Backend backend;
  if (o.backend == "q")
    backend = Backend::Q;
  else if (o.backend == "t")
    backend = Backend::T;
  else
    fail(ErrorKind::SchemaError, "backend must be \"q\" or \"t\"");
  ElemSeries s = o.log ? gw_elem(o.genus, o.qdeg, backend, o.t_order, policy)
                       : z_elem(o.genus, o.qdeg, backend, o.t_order, policy);
  emit_artifact(to_json(s), o.out_path);
  return 0;
}

int run_bps(const Options& o) {
  const Json in = parse_json(read_file(o.in_path));
  if (o.invert) {
    NovikovSeries gw = series_from_json(in);
    emit_artifact(bps_to_json(bps_invert(gw, o.t_order)), o.out_path);
  } else {
    BpsTable n = bps_from_json(in);
    const Rational energy = o.energy.empty() ? n.energy()
                                             : Rational::from_string(o.energy);
    const int gmax = o.gmax < 0 ? n.index_max() : o.gmax;
    emit_artifact(series_to_json(bps_forward(n, energy, gmax, o.t_order)),
                  o.out_path);
  }
  return 0;
}

int run_solve(const Options& o, const ThreadPolicy& policy) {
  NovikovSeries gw = series_from_json(parse_json(read_file(o.in_path)));
  PipelineReport report = full_pipeline(gw, o.t_order, policy);
  emit_report(to_json(report), o.out_path, o.quiet);
  return report.elem_integral && report.bps_integral ? 0 : 1;
}

int run_check(const Options& o, const ThreadPolicy& policy) {
  LocalReport report = check_local_bps(o.genus, o.qdeg, o.t_order, policy);
  emit_report(to_json(report), o.out_path, o.quiet);
  return report.pass ? 0 : 1;
}

int run_fano(const Options& o) {
  FanoSeries f = fano_from_json(parse_json(read_file(o.in_path)));
  auto [cy, fano] = split_by_chern(f.series, f.chern);
  Json out;
  out["chern"] = f.chern;
  out["insertions"] = f.insertions;
  out["cy_bps"] = bps_to_json(bps_invert(cy, o.t_order));
  out["fano_bps"] =
      bps_to_json(fano_invert(FanoSeries{fano, f.chern, f.insertions},
                              o.t_order));
  emit_artifact(out, o.out_path);
  return 0;
}

int run_am(const Options& o) {
  NovikovSeries gw0 = series_from_json(parse_json(read_file(o.in_path)));
  emit_artifact(bps_to_json(am_invert(gw0, o.insertions)), o.out_path);
  return 0;
}

int run_dim(const Options& o) {
  Json out;
  out["expected_dimension"] =
      expected_dimension(o.c1a, o.dimx, o.genus, o.dims);
  emit_artifact(out, o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gromov-Witten / BPS toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--quiet", o.quiet, "suppress reports on stdout");

  CLI::App* elem = app.add_subcommand("elem", "elementary-cluster series");
  elem->add_option("--genus", o.genus, "cluster genus")->required();
  elem->add_option("--qdeg", o.qdeg, "q-degree window")->required();
  elem->add_option("--backend", o.backend, "q or t (default q)");
  elem->add_option("--torder", o.t_order, "t-order (t backend)");
  elem->add_flag("--log", o.log, "emit GW^elem instead of Z^elem");
  elem->add_option("--out", o.out_path, "output file (default stdout)");

  CLI::App* bps = app.add_subcommand("bps", "BPS transform");
  bps->add_option("--in", o.in_path, "input series file")->required();
  bps->add_flag("--invert", o.invert, "GW series in, BPS table out");
  bps->add_option("--torder", o.t_order, "t-order")->required();
  bps->add_option("--energy", o.energy, "output energy (forward)");
  bps->add_option("--gmax", o.gmax, "output genus bound (forward)");
  bps->add_option("--out", o.out_path, "output file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "cluster-count pipeline");
  solve->add_option("--in", o.in_path, "input GW series file")->required();
  solve->add_option("--torder", o.t_order, "t-order")->required();
  solve->add_option("--out", o.out_path, "report file (default stdout)");

  CLI::App* check = app.add_subcommand("check", "local BPS laws");
  check->add_option("--genus", o.genus, "cluster genus")->required();
  check->add_option("--qdeg", o.qdeg, "q-degree window")->required();
  check->add_option("--torder", o.t_order, "t-order (default: law window)");
  check->add_option("--out", o.out_path, "report file (default stdout)");

  CLI::App* fano = app.add_subcommand("fano", "positive-c1 transform");
  fano->add_option("--in", o.in_path, "input series file (with chern form)")
      ->required();
  fano->add_option("--torder", o.t_order, "t-order")->required();
  fano->add_option("--out", o.out_path, "output file (default stdout)");

  CLI::App* am = app.add_subcommand("am", "genus-zero cover transform");
  am->add_option("--in", o.in_path, "input genus-zero series file")
      ->required();
  am->add_option("--insertions", o.insertions, "number of point insertions")
      ->required();
  am->add_option("--out", o.out_path, "output file (default stdout)");

  CLI::App* dim = app.add_subcommand("dim", "expected dimension");
  dim->add_option("--c1a", o.c1a, "first Chern number of the class")
      ->required();
  dim->add_option("--dimx", o.dimx, "real dimension of the target")
      ->required();
  dim->add_option("--genus", o.genus, "domain genus")->required();
  dim->add_option("--dims", o.dims, "insertion dimensions")
      ->delimiter(',');
  dim->add_option("--out", o.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << gvkit::dump_json(
        gvkit::error_json("usage_error", e.what()));
    return 2;
  }

  try {
    const gvkit::ThreadPolicy policy = gvkit::ThreadPolicy::from_env();
    if (elem->parsed()) return run_elem(o, policy);
    if (bps->parsed()) return run_bps(o);
    if (solve->parsed()) return run_solve(o, policy);
    if (check->parsed()) return run_check(o, policy);
    if (fano->parsed()) return run_fano(o);
    if (am->parsed()) return run_am(o);
    if (dim->parsed()) return run_dim(o);
  } catch (const gvkit::Error& e) {
    std::cerr << gvkit::dump_json(gvkit::error_json(e));
    return 2;
  } catch (const std::exception& e) {
    std::cerr << gvkit::dump_json(
        gvkit::error_json("internal_error", e.what()));
    return 2;
  }
  return 0;
}
