// cpci: command-line front end over the libcpci C interface.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpci/cpci.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct Failure {
  int code;
};

void check(cpci_status st) {
  if (st == CPCI_OK) return;
  std::fprintf(stderr, "cpci: %s\n", cpci_last_error());
  throw Failure{st == CPCI_ERR_INTERNAL ? kExitInternal : kExitInput};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::fprintf(stderr, "cpci: %s\n", msg.c_str());
  throw Failure{kExitInput};
}

struct EnsembleDeleter {
  void operator()(cpci_ensemble* e) const { cpci_ensemble_free(e); }
};
struct SummaryDeleter {
  void operator()(cpci_summary* s) const { cpci_summary_free(s); }
};
struct ModelDeleter {
  void operator()(cpci_model* m) const { cpci_model_free(m); }
};
using EnsemblePtr = std::unique_ptr<cpci_ensemble, EnsembleDeleter>;
using SummaryPtr = std::unique_ptr<cpci_summary, SummaryDeleter>;
using ModelPtr = std::unique_ptr<cpci_model, ModelDeleter>;

EnsemblePtr load_ensemble(const std::string& path) {
  cpci_ensemble* e = nullptr;
  check(cpci_ensemble_load(path.c_str(), &e));
  return EnsemblePtr(e);
}

SummaryPtr load_summary(const std::string& path) {
  cpci_summary* s = nullptr;
  check(cpci_summary_load_csv(path.c_str(), &s));
  return SummaryPtr(s);
}

ModelPtr load_model(const std::string& path) {
  cpci_model* m = nullptr;
  check(cpci_model_load(path.c_str(), &m));
  return ModelPtr(m);
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct Options {
  std::string input;
  std::string output;
  std::string counts;
  double gamma = 0.95;
  std::uint64_t seed = 0;
  std::size_t member = 0;
  std::size_t count = 1;
  std::vector<std::size_t> sizes;
  std::vector<double> probabilities;
  std::size_t draws = 100000;
  std::size_t reps = 10000;
  std::size_t vi = 0;
  std::size_t vj = 0;
  double rmax = cpci_default_style().r_max;
  double cell = cpci_default_style().cell;
  bool ground_truth = false;
};

void run_classify(const Options& o) {
  auto e = load_ensemble(o.input);
  std::size_t m = 0;
  check(cpci_ensemble_dims(e.get(), nullptr, nullptr, &m));
  if (o.member >= m)
    usage_error("--member " + std::to_string(o.member) + " out of range [0," + std::to_string(m - 1) + "]");
  check(cpci_classify_member_csv(e.get(), o.member, o.output.c_str()));
}

void run_estimate(const Options& o) {
  auto e = load_ensemble(o.input);
  cpci_summary* s = nullptr;
  check(cpci_estimate(e.get(), o.gamma, &s));
  SummaryPtr summary(s);
  if (!o.counts.empty()) check(cpci_counts_csv(e.get(), o.counts.c_str()));
  check(cpci_summary_save_csv(summary.get(), o.output.c_str()));
}

void run_query(const Options& o) {
  auto s = load_summary(o.input);
  std::size_t needed = 0;
  check(cpci_summary_describe(s.get(), o.vi, o.vj, nullptr, 0, &needed));
  std::string text(needed, '\0');
  check(cpci_summary_describe(s.get(), o.vi, o.vj, text.data(), text.size(), &needed));
  text.resize(needed - 1);
  std::fputs(text.c_str(), stdout);
}

void run_render(const Options& o) {
  auto s = load_summary(o.input);
  if (o.ground_truth) check(cpci_summary_check_degenerate(s.get()));
  cpci_style style = cpci_default_style();
  style.r_max = o.rmax;
  style.cell = o.cell;
  style.margin = std::max(style.margin, o.cell / 2 + 4);
  check(cpci_render_svg(s.get(), &style, o.output.c_str()));
}

void run_fit(const Options& o) {
  auto e = load_ensemble(o.input);
  cpci_model* m = nullptr;
  check(cpci_model_fit(e.get(), &m));
  ModelPtr model(m);
  check(cpci_model_save(model.get(), o.output.c_str()));
}

void run_sample(const Options& o) {
  if (o.sizes.empty()) usage_error("--sizes is required");
  if (o.count < 1) usage_error("--count must be at least 1");
  auto model = load_model(o.input);
  std::error_code ec;
  std::filesystem::create_directories(o.output, ec);
  if (ec) usage_error("cannot create output directory '" + o.output + "': " + ec.message());
  std::uint64_t ordinal = 0;
  for (auto size : o.sizes) {
    for (std::size_t rep = 0; rep < o.count; ++rep, ++ordinal) {
      cpci_ensemble* e = nullptr;
      check(cpci_model_sample(model.get(), size, o.seed + ordinal, &e));
      EnsemblePtr ens(e);
      char name[64];
      std::snprintf(name, sizeof name, "ens_m%03zu_%02zu.egf", size, rep);
      auto path = (std::filesystem::path(o.output) / name).string();
      check(cpci_ensemble_save(ens.get(), path.c_str()));
    }
  }
}

void run_truth(const Options& o) {
  auto model = load_model(o.input);
  cpci_summary* s = nullptr;
  check(cpci_model_truth(model.get(), o.draws, o.seed, o.gamma, o.ground_truth ? 1 : 0, &s));
  SummaryPtr summary(s);
  check(cpci_summary_save_csv(summary.get(), o.output.c_str()));
}

void run_coverage(const Options& o) {
  if (o.probabilities.empty()) usage_error("--p is required");
  if (o.sizes.empty()) usage_error("--sizes is required");
  std::string csv = "p,m,gamma,reps,coverage,mean_width\n";
  for (double p : o.probabilities) {
    for (auto m : o.sizes) {
      cpci_coverage_report r{};
      check(cpci_coverage(p, m, o.gamma, o.reps, o.seed, &r));
      csv += fmt9(r.p_true) + "," + std::to_string(r.m) + "," + fmt9(r.gamma) + "," +
             std::to_string(r.reps) + "," + fmt9(r.coverage) + "," + fmt9(r.mean_width) + "\n";
    }
  }
  if (o.output.empty())
    std::fputs(csv.c_str(), stdout);
  else
    check(cpci_write_file(o.output.c_str(), csv.data(), csv.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confidence intervals for critical points in ensembles of 2D scalar fields"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "List critical vertices of one ensemble member");
  classify->add_option("--input", o.input, "Ensemble (EGF)")->required();
  classify->add_option("--output", o.output, "CSV i,j,type")->required();
  classify->add_option("--member", o.member, "Member index");

  auto* estimate = app.add_subcommand("estimate", "Per-vertex Jeffreys intervals for every type");
  estimate->add_option("--input", o.input, "Ensemble (EGF)")->required();
  estimate->add_option("--output", o.output, "Summary CSV")->required();
  estimate->add_option("--gamma", o.gamma, "Confidence level");
  estimate->add_option("--counts", o.counts, "Also write per-vertex counts CSV");

  auto* query = app.add_subcommand("query", "Print the nine values of one vertex");
  query->add_option("--input", o.input, "Summary CSV")->required();
  query->add_option("--i", o.vi, "Vertex x index")->required();
  query->add_option("--j", o.vj, "Vertex y index")->required();

  auto* render = app.add_subcommand("render", "Draw the glyph map as SVG");
  render->add_option("--input", o.input, "Summary CSV")->required();
  render->add_option("--output", o.output, "SVG file")->required();
  render->add_option("--rmax", o.rmax, "Glyph radius at p = 1 (pixels)");
  render->add_option("--cell", o.cell, "Vertex spacing (pixels)");
  render->add_flag("--ground-truth", o.ground_truth, "Require lower = estimate = upper on every row");

  auto* synth = app.add_subcommand("synth", "Synthetic ensembles from a multivariate normal model");
  synth->require_subcommand(1);
  auto* fit = synth->add_subcommand("fit", "Estimate mean and covariance factor from an ensemble");
  fit->add_option("--input", o.input, "Seed ensemble (EGF)")->required();
  fit->add_option("--output", o.output, "Model (MMF)")->required();
  auto* sample = synth->add_subcommand("sample", "Draw numbered ensembles from a model");
  sample->add_option("--input", o.input, "Model (MMF)")->required();
  sample->add_option("--output", o.output, "Output directory")->required();
  sample->add_option("--count", o.count, "Ensembles per size");
  sample->add_option("--sizes", o.sizes, "Ensemble sizes, e.g. 4,9,16")->delimiter(',')->required();
  sample->add_option("--seed", o.seed, "Base seed; ensemble k uses seed + k");
  auto* truth = synth->add_subcommand("truth", "Monte-Carlo ground-truth probabilities");
  truth->add_option("--input", o.input, "Model (MMF)")->required();
  truth->add_option("--output", o.output, "Summary CSV")->required();
  truth->add_option("--draws", o.draws, "Number of draws");
  truth->add_option("--seed", o.seed, "Seed");
  truth->add_option("--gamma", o.gamma, "Confidence level");
  truth->add_flag("--ground-truth", o.ground_truth, "Collapse intervals onto the point estimates");

  auto* coverage = app.add_subcommand("coverage", "Monte-Carlo coverage of the Jeffreys interval");
  coverage->add_option("--p", o.probabilities, "True probabilities, e.g. 0.1,0.5")->delimiter(',')->required();
  coverage->add_option("--sizes", o.sizes, "Ensemble sizes, e.g. 9,49")->delimiter(',')->required();
  coverage->add_option("--gamma", o.gamma, "Confidence level");
  coverage->add_option("--reps", o.reps, "Repetitions per row");
  coverage->add_option("--seed", o.seed, "Seed");
  coverage->add_option("--output", o.output, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify) run_classify(o);
    else if (*estimate) run_estimate(o);
    else if (*query) run_query(o);
    else if (*render) run_render(o);
    else if (*fit) run_fit(o);
    else if (*sample) run_sample(o);
    else if (*truth) run_truth(o);
    else if (*coverage) run_coverage(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cpci: internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
