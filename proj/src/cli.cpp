#include "legmosaic/cli.hpp"

#include <zlib.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "legmosaic/bounds.hpp"
#include "legmosaic/census.hpp"
#include "legmosaic/constructions.hpp"
#include "legmosaic/counting.hpp"
#include "legmosaic/enumeration.hpp"
#include "legmosaic/errors.hpp"
#include "legmosaic/invariants.hpp"
#include "legmosaic/render.hpp"
#include "legmosaic/tiles.hpp"
#include "legmosaic/topology.hpp"

namespace legmosaic {

namespace {

using nlohmann::json;

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw usage_error("UsageError", "cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "max_cells") cfg.max_cells = std::stoll(value);
    else if (key == "crossing_cap") cfg.crossing_cap = std::stoi(value);
    else if (key == "matrix_dim_cap") cfg.matrix_dim_cap = std::stoll(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "format") cfg.format = value;
    else if (key == "deterministic") cfg.deterministic = value != "0" && value != "false";
  }
}

void load_env(CliConfig& cfg) {
  auto get = [](const char* name) -> const char* { return std::getenv(name); };
  if (const char* v = get("LEGMOSAIC_MAX_CELLS")) cfg.max_cells = std::stoll(v);
  if (const char* v = get("LEGMOSAIC_CROSSING_CAP")) cfg.crossing_cap = std::stoi(v);
  if (const char* v = get("LEGMOSAIC_MATRIX_DIM_CAP")) cfg.matrix_dim_cap = std::stoll(v);
  if (const char* v = get("LEGMOSAIC_WORKERS")) cfg.workers = std::stoi(v);
  if (const char* v = get("LEGMOSAIC_OUT_DIR")) cfg.out_dir = v;
  if (const char* v = get("LEGMOSAIC_FORMAT")) cfg.format = v;
}

json invariants_json(const std::string& text) {
  MosaicEncoding enc = parse_encoding(text);
  Mosaic m = decode(enc);
  LegendrianInvariants inv = invariants_of(m);
  return json{{"encoding", enc.digits}, {"rows", enc.rows},   {"cols", enc.cols},
              {"components", inv.components}, {"tb", inv.tb}, {"rot", inv.rot},
              {"writhe", inv.writhe},  {"P", inv.positive},   {"N", inv.negative},
              {"C", inv.cusps},        {"U", inv.up},         {"D", inv.down}};
}

// Line sink for enumerate: plain file, gzip file, or stream.
class LineSink {
 public:
  LineSink(const std::string& path, bool append, std::ostream& fallback)
      : fallback_(fallback) {
    if (path.empty()) return;
    if (path.size() > 3 && path.substr(path.size() - 3) == ".gz") {
      gz_ = gzopen(path.c_str(), append ? "ab" : "wb");
      if (!gz_) throw usage_error("UsageError", "cannot open " + path);
    } else {
      file_.open(path, append ? std::ios::app : std::ios::trunc);
      if (!file_) throw usage_error("UsageError", "cannot open " + path);
    }
    to_file_ = true;
  }
  ~LineSink() {
    if (gz_) gzclose(gz_);
  }
  void write(const std::string& line) {
    if (gz_) {
      gzwrite(gz_, line.data(), static_cast<unsigned>(line.size()));
      gzwrite(gz_, "\n", 1);
    } else if (to_file_) {
      file_ << line << "\n";
    } else {
      fallback_ << line << "\n";
    }
  }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
  gzFile gz_ = nullptr;
  bool to_file_ = false;
};

int cmd_validate(const std::string& encoding, std::ostream& out) {
  Mosaic m = decode(encoding);
  bool ok = is_suitably_connected(m);
  out << "suitably connected: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_count(const CliConfig& cfg, int m, int n, const std::string& variant,
              int table_max, int delta_n, std::ostream& out) {
  CountVariant v = variant == "classical" ? CountVariant::classical
                                          : CountVariant::legendrian;
  std::size_t cap = static_cast<std::size_t>(cfg.matrix_dim_cap);
  if (delta_n > 0) {
    DeltaRatio d = ratio_delta(delta_n, 30, cap);
    if (cfg.format == "csv") {
      out << "n,numerator,denominator,ln_delta\n";
      out << d.n << "," << boost::multiprecision::numerator(d.ratio).str() << ","
          << boost::multiprecision::denominator(d.ratio).str() << "," << d.ln_text
          << "\n";
    } else {
      out << json{{"n", d.n},
                  {"numerator", boost::multiprecision::numerator(d.ratio).str()},
                  {"denominator", boost::multiprecision::denominator(d.ratio).str()},
                  {"ln_delta", d.ln_text}}
                 .dump()
          << "\n";
    }
    return 0;
  }
  if (table_max > 0) {
    auto table = count_table(table_max, table_max, v, cap);
    if (cfg.format == "csv") {
      out << "m,n,count\n";
      for (const auto& c : table)
        out << c.m << "," << c.n << "," << c.value.str() << "\n";
    } else {
      json rows = json::array();
      for (const auto& c : table)
        rows.push_back({{"m", c.m}, {"n", c.n}, {"count", c.value.str()}});
      out << rows.dump() << "\n";
    }
    return 0;
  }
  MosaicCount c = count(m, n, v, cap);
  if (cfg.format == "csv")
    out << c.value.str() << "\n";
  else
    out << json{{"m", c.m},
                {"n", c.n},
                {"variant", variant},
                {"count", c.value.str()}}
               .dump()
        << "\n";
  return 0;
}

int cmd_enumerate(const CliConfig& cfg, int rows, int cols, bool knots_only,
                  bool count_only, const std::string& out_path,
                  const std::string& resume_path, int prefix_cells,
                  std::ostream& out) {
  long long resume_after = -1;
  if (!resume_path.empty()) {
    std::ifstream ck(resume_path);
    if (ck) ck >> resume_after;
  }
  std::string ckpt_path =
      out_path.empty() ? std::string() : out_path + ".ckpt";

  long long total = 0;
  if (count_only && out_path.empty() && cfg.workers > 1) {
    total = enumerate_count_parallel(rows, cols,
                                     knots_only ? EnumFilter::knots_only
                                                : EnumFilter::all_links,
                                     cfg.workers, cfg.max_cells);
  } else {
    EnumerationRequest req;
    req.rows = rows;
    req.cols = cols;
    req.filter = knots_only ? EnumFilter::knots_only : EnumFilter::all_links;
    req.max_cells = cfg.max_cells;
    req.resume_after = resume_after;
    req.prefix_cells = prefix_cells;
    LineSink sink(out_path, resume_after >= 0, out);
    std::ofstream ckpt;
    total = enumerate(
        req,
        [&](const Mosaic& m) {
          if (!count_only) sink.write(encoding_text(encode(m)));
          return true;
        },
        [&](long long prefix) {
          if (!ckpt_path.empty()) {
            std::ofstream ck(ckpt_path, std::ios::trunc);
            ck << prefix << "\n";
          }
        });
  }
  out << "count: " << total << "\n";
  return 0;
}

int cmd_census(const CliConfig& cfg, int max_size, bool resume, std::ostream& out) {
  CensusOptions options;
  options.max_size = max_size;
  options.workers = cfg.workers;
  options.crossing_cap = cfg.crossing_cap;
  options.max_cells = std::max<long long>(cfg.max_cells,
                                          static_cast<long long>(max_size) * max_size);
  options.out_dir = cfg.out_dir;
  options.resume = resume;
  CensusResult census = run_census(options);

  json entries = json::array();
  std::set<std::string> types;
  for (const CensusEntry& e : census.entries) {
    entries.push_back({{"type", e.type},
                       {"tb", e.tb},
                       {"rot", e.rot},
                       {"min_size", e.min_size},
                       {"witness", e.witness},
                       {"count_at_min", e.count_at_min}});
    types.insert(e.type);
  }
  json summaries = json::array();
  for (const CensusSizeSummary& s : census.summaries)
    summaries.push_back({{"n", s.n},
                         {"knot_mosaics", s.knot_mosaics},
                         {"max_tb", s.max_tb},
                         {"min_tb", s.min_tb},
                         {"max_abs_rot", s.max_abs_rot},
                         {"distinct_triples", s.triples_unsigned},
                         {"distinct_triples_signed", s.triples_signed},
                         {"types", s.types}});
  json anomalies = json::array();
  for (const StabilizationAnomaly& a : stabilization_anomalies(census))
    anomalies.push_back({{"type", a.type},
                         {"tb", a.source_tb},
                         {"rot", a.source_rot},
                         {"size", a.source_size},
                         {"target_tb", a.target_tb},
                         {"target_rot", a.target_rot},
                         {"target_size", a.target_size}});

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(cfg.out_dir + "/census.json") << entries.dump(2) << "\n";
    std::ofstream(cfg.out_dir + "/summary.json")
        << json{{"summaries", summaries}, {"stabilization_anomalies", anomalies}}.dump(2)
        << "\n";
    for (const std::string& type : types)
      std::ofstream(cfg.out_dir + "/range_" + type + ".csv")
          << mountain_range_csv(census, type);
  }
  if (cfg.format == "csv") {
    out << "type,tb,rot,min_size,witness,count_at_min\n";
    for (const CensusEntry& e : census.entries)
      out << e.type << "," << e.tb << "," << e.rot << "," << e.min_size << ","
          << e.witness << "," << e.count_at_min << "\n";
  } else {
    out << json{{"entries", entries},
                {"summaries", summaries},
                {"stabilization_anomalies", anomalies}}
               .dump(2)
        << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Legendrian knot mosaic toolkit"};
  app.require_subcommand(1);

  std::string config_path, format, out_dir;
  int workers = -1;
  long long max_cells = -1;
  int crossing_cap = -1;
  long long matrix_dim_cap = -1;
  bool deterministic = true;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--workers", workers, "worker thread count");
  app.add_option("--format", format, "output format: json or csv");
  app.add_option("--out-dir", out_dir, "output directory");
  app.add_option("--max-cells", max_cells, "enumeration budget in cells");
  app.add_option("--crossing-cap", crossing_cap, "skein crossing cap");
  app.add_option("--matrix-dim-cap", matrix_dim_cap, "state-matrix dimension cap");
  app.add_flag("--deterministic,!--no-deterministic", deterministic,
               "suppress nondeterministic output (default on)");

  // validate
  std::string v_encoding;
  CLI::App* validate = app.add_subcommand("validate", "check suitable connectedness");
  validate->add_option("encoding", v_encoding)->required();

  // invariants
  std::string i_encoding;
  CLI::App* invariants = app.add_subcommand("invariants", "classical invariants");
  invariants->add_option("encoding", i_encoding)->required();

  // identify
  std::string id_encoding;
  CLI::App* identify_cmd = app.add_subcommand("identify", "smooth knot type");
  identify_cmd->add_option("encoding", id_encoding)->required();

  // count
  int c_m = 0, c_n = 0, c_table = 0, c_delta = 0;
  std::string c_variant = "legendrian";
  CLI::App* count_cmd = app.add_subcommand("count", "mosaic counts");
  count_cmd->add_option("--m", c_m);
  count_cmd->add_option("--n", c_n);
  count_cmd->add_option("--variant", c_variant)
      ->check(CLI::IsMember({"legendrian", "classical"}));
  count_cmd->add_option("--table-max", c_table);
  count_cmd->add_option("--delta", c_delta, "emit the legendrian/classical ratio");

  // enumerate
  int e_size = 0, e_rows = 0, e_cols = 0, e_prefix = 0;
  bool e_knots = false, e_count_only = false;
  std::string e_out, e_resume;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "generate mosaics");
  enum_cmd->add_option("--size", e_size);
  enum_cmd->add_option("--rows", e_rows);
  enum_cmd->add_option("--cols", e_cols);
  enum_cmd->add_flag("--knots-only", e_knots);
  enum_cmd->add_flag("--count-only", e_count_only);
  enum_cmd->add_option("--out", e_out);
  enum_cmd->add_option("--resume", e_resume, "checkpoint file to resume from");
  enum_cmd->add_option("--prefix-cells", e_prefix);

  // bounds
  long long b_tb = 0, b_rot = 0;
  bool b_unknot = false;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "mosaic number bounds");
  bounds_cmd->add_option("--tb", b_tb)->required();
  bounds_cmd->add_option("--rot", b_rot)->required();
  bounds_cmd->add_flag("--unknot", b_unknot);

  // construct
  CLI::App* construct = app.add_subcommand("construct", "explicit mosaics");
  int cr_n = 0;
  CLI::App* crab = construct->add_subcommand("crab", "crab bucket family");
  crab->add_option("--n", cr_n)->required();
  long long u_tb = 0, u_rot = 0;
  CLI::App* unknot = construct->add_subcommand("unknot", "soil-and-moves unknot");
  unknot->add_option("--tb", u_tb)->required();
  unknot->add_option("--rot", u_rot)->required();
  construct->require_subcommand(1);

  // census
  int cs_max = 5;
  bool cs_resume = false;
  CLI::App* census_cmd = app.add_subcommand("census", "knot census pipeline");
  census_cmd->add_option("--max-size", cs_max);
  census_cmd->add_flag("--resume", cs_resume);

  // render
  std::string r_encoding, r_style = "ascii", r_out;
  CLI::App* render_cmd = app.add_subcommand("render", "draw a mosaic");
  render_cmd->add_option("encoding", r_encoding)->required();
  render_cmd->add_option("--style", r_style)->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", r_out);

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << nlohmann::json{{"error", "UsageError"}, {"message", e.what()}}.dump()
        << "\n";
    return 2;
  }

  CliConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    load_env(cfg);
    if (workers > 0) cfg.workers = workers;
    if (!format.empty()) cfg.format = format;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (max_cells > 0) cfg.max_cells = max_cells;
    if (crossing_cap > 0) cfg.crossing_cap = crossing_cap;
    if (matrix_dim_cap > 0) cfg.matrix_dim_cap = matrix_dim_cap;
    cfg.deterministic = deterministic;

    if (validate->parsed()) return cmd_validate(v_encoding, out);
    if (invariants->parsed()) {
      out << invariants_json(i_encoding).dump() << "\n";
      return 0;
    }
    if (identify_cmd->parsed()) {
      Mosaic m = decode(id_encoding);
      PlanarDiagram pd = to_planar_diagram(m);
      HomflyPolynomial poly = homfly(pd, cfg.crossing_cap);
      out << json{{"type", identify_polynomial(poly)},
                  {"homfly", poly.to_string()},
                  {"crossings", static_cast<int>(pd.crossings.size())}}
                 .dump()
          << "\n";
      return 0;
    }
    if (count_cmd->parsed())
      return cmd_count(cfg, c_m, c_n, c_variant, c_table, c_delta, out);
    if (enum_cmd->parsed()) {
      int rows = e_size > 0 ? e_size : e_rows;
      int cols = e_size > 0 ? e_size : e_cols;
      if (rows < 1 || cols < 1)
        throw usage_error("UsageError", "need --size or --rows/--cols");
      return cmd_enumerate(cfg, rows, cols, e_knots, e_count_only, e_out, e_resume,
                           e_prefix, out);
    }
    if (bounds_cmd->parsed()) {
      InvariantPair inv{b_tb, b_rot};
      BoundReport report = lower_bounds(inv);
      json j;
      auto put = [&j](const char* key, const std::optional<long long>& v) {
        if (v) j[key] = *v; else j[key] = nullptr;
      };
      put("lower_combinatorial", report.lower_combinatorial);
      put("lower_board", report.lower_board);
      put("lower_cone_rot", report.lower_cone_rot);
      put("lower_cone_tb", report.lower_cone_tb);
      j["best_lower"] = report.best_lower;
      if (b_unknot) {
        j["upper_unknot"] = unknot_upper_bound(inv);
        if (inv.rot != 0 && inv.tb == -(inv.rot < 0 ? -inv.rot : inv.rot) - 1)
          j["upper_unknot_extremal"] = unknot_upper_bound_extremal(inv);
      } else {
        j["upper_unknot"] = nullptr;
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (construct->parsed()) {
      Mosaic m = crab->parsed() ? crab_bucket(cr_n) : build_unknot(u_tb, u_rot);
      json j = invariants_json(encoding_text(encode(m)));
      out << j.dump() << "\n";
      return 0;
    }
    if (census_cmd->parsed()) return cmd_census(cfg, cs_max, cs_resume, out);
    if (render_cmd->parsed()) {
      Mosaic m = decode(r_encoding);
      std::string art = r_style == "svg" ? render_svg(m) : render_ascii(m);
      if (!r_out.empty()) {
        std::ofstream f(r_out, std::ios::trunc);
        f << art;
      } else {
        out << art;
      }
      return 0;
    }
    throw usage_error("UsageError", "no subcommand given");
  } catch (const Error& e) {
    err << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    switch (e.kind()) {
      case ErrorKind::domain: return 1;
      case ErrorKind::usage: return 2;
      case ErrorKind::resource: return 3;
    }
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace legmosaic
