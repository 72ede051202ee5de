#include "kroc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "kroc/averaging.hpp"
#include "kroc/csv.hpp"
#include "kroc/curves.hpp"
#include "kroc/errors.hpp"
#include "kroc/metrics.hpp"
#include "kroc/segopt.hpp"
#include "kroc/synth.hpp"
#include "kroc/transform.hpp"

namespace kroc::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

// Bad output destination; reported with the parse-error code.
class OutputError : public Error {
 public:
  using Error::Error;
};

Json point_json(const PointMetric& m) { return {{"value", m.value}, {"rank", m.rank}, {"x", m.x}}; }

Json eval_report(const LabeledSample& sample, bool with_vertices) {
  const ClassCounts counts = tally_classes(sample);
  const auto groups = rank_and_group(sample);
  const RocCurve roc = build_roc(groups, counts);
  const KsCurve ks = build_ks(groups, counts);

  const double area_roc = auc_roc(roc);
  const double area_ks = auc_ks(ks);

  Json report;
  report["schema"] = kReportSchema;
  report["counts"] = {{"n", counts.n}, {"n_target", counts.n_target}, {"n_complement", counts.n_complement}};
  report["prevalence"] = counts.prevalence();
  report["auc_roc"] = area_roc;
  report["auc_ks"] = area_ks;
  report["gini"] = gini(area_roc);
  report["identity_residual"] = area_roc - 0.5 - area_ks;
  report["max_ks2"] = point_json(max_ks2(ks));
  report["mvd"] = point_json(mvd(roc));
  report["max_ks2_projection"] = point_json(max_ks2_projection(roc));
  report["tie_groups"] = groups.size();
  if (with_vertices) {
    Json roc_vertices = Json::array();
    for (const auto& v : roc.vertices) roc_vertices.push_back({v.u, v.v, v.rank});
    Json ks_vertices = Json::array();
    for (const auto& v : ks.vertices) ks_vertices.push_back({v.x, v.y, v.rank});
    report["roc"] = std::move(roc_vertices);
    report["ks"] = std::move(ks_vertices);
  }
  return report;
}

void write_curves_csv(std::ostream& out, const LabeledSample& sample) {
  const ClassCounts counts = tally_classes(sample);
  const auto groups = rank_and_group(sample);
  const RocCurve roc = build_roc(groups, counts);
  const KsCurve ks = build_ks(groups, counts);
  out << "rank,targets,complements,u,v,x,y\n";
  for (std::size_t i = 0; i < roc.vertices.size(); ++i) {
    const auto& r = roc.vertices[i];
    const auto& k = ks.vertices[i];
    out << r.rank << ',' << r.targets << ',' << r.complements << ',' << format_double(r.u) << ','
        << format_double(r.v) << ',' << format_double(k.x) << ',' << format_double(k.y) << '\n';
  }
}

// Writes to path, or to fallback when path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open output file " + path);
  write(file);
  if (!file) throw OutputError("failed writing " + path);
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw BoundsViolation(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

LabeledSample synthesize(const std::string& kind, const std::vector<std::string>& params,
                         std::uint64_t seed) {
  const auto expect = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw BoundsViolation("synth " + kind + " expects " + usage);
  };
  if (kind == "ideal") {
    expect(2, "<n> <n_target>");
    return gen_ideal(parse_number<std::size_t>(params[0], "n"),
                     parse_number<std::size_t>(params[1], "n_target"));
  }
  if (kind == "random") {
    expect(2, "<n> <n_target>");
    return gen_random(parse_number<std::size_t>(params[0], "n"),
                      parse_number<std::size_t>(params[1], "n_target"), seed);
  }
  if (kind == "binormal") {
    expect(3, "<n> <prevalence> <separation>");
    BinormalSpec spec;
    spec.n = parse_number<std::size_t>(params[0], "n");
    spec.prevalence = parse_number<double>(params[1], "prevalence");
    spec.separation = parse_number<double>(params[2], "separation");
    spec.seed = seed;
    return gen_binormal(spec);
  }
  throw BoundsViolation("unknown synth kind '" + kind + "' (expected ideal, random or binormal)");
}

struct Options {
  std::string eval_input;
  std::string eval_curves;
  std::string eval_out;
  bool eval_summary = false;

  std::vector<std::string> average_inputs;
  std::size_t average_grid = kDefaultGridSize;
  std::string average_out;

  std::string reorder_input;
  std::string reorder_out;

  std::string synth_kind;
  std::vector<std::string> synth_params;
  std::uint64_t synth_seed = 1;
  std::string synth_out;
};

int cmd_eval(const Options& opt, std::ostream& out) {
  const LabeledSample sample = read_sample_file(opt.eval_input);
  const Json report = eval_report(sample, !opt.eval_summary);
  if (!opt.eval_curves.empty()) {
    emit(opt.eval_curves, out, [&](std::ostream& os) { write_curves_csv(os, sample); });
  }
  emit(opt.eval_out, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
  return kOk;
}

int cmd_average(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.average_inputs.size() < 2) {
    err << "average: need at least 2 input files, got " << opt.average_inputs.size() << '\n';
    return kUsageError;
  }
  std::vector<LabeledSample> samples;
  samples.reserve(opt.average_inputs.size());
  for (const auto& path : opt.average_inputs) samples.push_back(read_sample_file(path));

  std::vector<KsCurve> folds;
  folds.reserve(samples.size());
  for (const auto& s : samples) folds.push_back(build_ks(s));

  const AveragedKsCurve avg = average_ks_curves(folds, opt.average_grid);
  const ProjectedRocBand band = project_average_to_roc(avg);
  emit(opt.average_out, out, [&](std::ostream& os) {
    os << "x,mean_y,stderr_y,u,v,du,dv\n";
    for (std::size_t j = 0; j < avg.grid.size(); ++j) {
      os << format_double(avg.grid[j]) << ',' << format_double(avg.mean_y[j]) << ','
         << format_double(avg.stderr_y[j]) << ',' << format_double(band.mean[j].u) << ','
         << format_double(band.mean[j].v) << ',' << format_double(band.du[j]) << ','
         << format_double(band.dv[j]) << '\n';
    }
  });
  return kOk;
}

int cmd_reorder(const Options& opt, std::ostream& out) {
  const LabeledSample sample = read_sample_file(opt.reorder_input);
  const SegmentReordering r = reorder_for_max_ks(sample);
  Json footer;
  footer["achieved_max_ks2"] = r.achieved_max_ks2;
  footer["achieved_rank"] = r.achieved_rank;
  footer["original_max_ks2"] = r.original_max_ks2.value;
  footer["original_rank"] = r.original_max_ks2.rank;
  footer["segments"] = r.segments.size();
  emit(opt.reorder_out, out, [&](std::ostream& os) {
    os << "value_low,value_high,new_position\n";
    for (const auto& row : r.table) {
      os << format_double(row.value_low) << ',' << format_double(row.value_high) << ','
         << row.new_position << '\n';
    }
    os << footer.dump() << '\n';
  });
  return kOk;
}

int cmd_synth(const Options& opt, std::ostream& out) {
  const LabeledSample sample = synthesize(opt.synth_kind, opt.synth_params, opt.synth_seed);
  emit(opt.synth_out, out, [&](std::ostream& os) { write_sample(os, sample); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"ROC and Kolmogorov-Smirnov curve evaluation for binary classifiers", "kroc"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Curves, areas and single-point metrics of a scored sample");
  eval->add_option("file", opt.eval_input, "CSV with header score,label")->required();
  eval->add_option("--curves", opt.eval_curves, "Write ROC and KS vertices as CSV");
  eval->add_option("--out", opt.eval_out, "Write the JSON report here instead of stdout");
  eval->add_flag("--summary", opt.eval_summary, "Omit vertex lists from the JSON report");

  auto* average = app.add_subcommand("average", "Average fold KS curves and project the band to ROC space");
  average->add_option("files", opt.average_inputs, "Fold CSV files")->required();
  average->add_option("--grid", opt.average_grid, "Number of abscissa quantiles")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  average->add_option("--out", opt.average_out, "Write CSV here instead of stdout");

  auto* reorder = app.add_subcommand("reorder", "Monotone-segment reordering table maximizing Max KS");
  reorder->add_option("file", opt.reorder_input, "CSV with header score,label")->required();
  reorder->add_option("--out", opt.reorder_out, "Write the table here instead of stdout");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic scored sample");
  synth->add_option("kind", opt.synth_kind, "ideal | random | binormal")->required();
  synth->add_option("params", opt.synth_params,
                    "ideal/random: <n> <n_target>; binormal: <n> <prevalence> <separation>");
  synth->add_option("--seed", opt.synth_seed, "PRNG seed");
  synth->add_option("--out", opt.synth_out, "Write CSV here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kroc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, out);
    if (average->parsed()) return cmd_average(opt, out, err);
    if (reorder->parsed()) return cmd_reorder(opt, out);
    if (synth->parsed()) return cmd_synth(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NonFiniteScore& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const BoundsViolation& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    // Empty, single-class or otherwise degenerate data.
    err << "error: " << e.what() << '\n';
    return kDegenerateData;
  }
  return kUsageError;
}

}  // namespace kroc::cli
