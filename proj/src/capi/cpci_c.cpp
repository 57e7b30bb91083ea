#include "cpci/cpci.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "../cpci/critical.hpp"
#include "../cpci/errors.hpp"
#include "../cpci/fileio.hpp"
#include "../cpci/render.hpp"
#include "../cpci/stats.hpp"
#include "../cpci/synth.hpp"
#include "../cpci/tables.hpp"

struct cpci_ensemble {
  cpci::Ensemble value;
};

struct cpci_summary {
  cpci::SummaryTable value;
};

struct cpci_model {
  cpci::MomentModel value;
};

namespace {

thread_local std::string g_last_error;

cpci_status fail(cpci_status code, std::string msg) {
  g_last_error = std::move(msg);
  return code;
}

// Runs `fn`, mapping library exceptions onto status codes.
template <typename Fn>
cpci_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    fn();
    return CPCI_OK;
  } catch (const cpci::ParseError& e) {
    return fail(CPCI_ERR_PARSE, e.what());
  } catch (const cpci::InputError& e) {
    return fail(CPCI_ERR_INPUT, e.what());
  } catch (const cpci::IoError& e) {
    return fail(CPCI_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CPCI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CPCI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CPCI_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
const T& deref(const T* p, const char* what) {
  if (!p) throw cpci::InputError(std::string("null ") + what);
  return *p;
}

template <typename T>
void check_out(T** out) {
  if (!out) throw cpci::InputError("null output handle");
  *out = nullptr;
}

std::string path_arg(const char* path) {
  if (!path || !*path) throw cpci::InputError("empty path");
  return path;
}

template <typename Writer>
void write_text(const char* path, Writer&& w) {
  std::ostringstream os;
  w(os);
  cpci::atomic_write(path_arg(path), os.str());
}

cpci::GlyphStyle to_style(const cpci_style* s) {
  cpci::GlyphStyle style;
  if (s) {
    style.r_max = s->r_max;
    style.cell = s->cell;
    style.arc_stroke = s->arc_stroke;
    style.margin = s->margin;
  }
  return style;
}

}  // namespace

extern "C" {

const char* cpci_last_error(void) { return g_last_error.c_str(); }

const char* cpci_version(void) { return "1.0.0"; }

cpci_status cpci_ensemble_load(const char* path, cpci_ensemble** out) {
  return guarded([&] {
    check_out(out);
    std::istringstream in(cpci::read_file(path_arg(path)));
    *out = new cpci_ensemble{cpci::load_ensemble(in)};
  });
}

cpci_status cpci_ensemble_from_values(size_t nx, size_t ny, size_t m, const double* values,
                                      cpci_ensemble** out) {
  return guarded([&] {
    check_out(out);
    if (!values) throw cpci::InputError("null values");
    cpci::GridTopology topo(nx, ny);
    const size_t n = topo.vertex_count();
    std::vector<cpci::ScalarField> members;
    for (size_t k = 0; k < m; ++k) members.emplace_back(std::vector<double>(values + k * n, values + (k + 1) * n));
    *out = new cpci_ensemble{cpci::Ensemble(topo, std::move(members))};
  });
}

cpci_status cpci_ensemble_save(const cpci_ensemble* e, const char* path) {
  return guarded([&] {
    const auto& ens = deref(e, "ensemble").value;
    write_text(path, [&](std::ostream& os) { cpci::save_ensemble(ens, os); });
  });
}

cpci_status cpci_ensemble_dims(const cpci_ensemble* e, size_t* nx, size_t* ny, size_t* m) {
  return guarded([&] {
    const auto& ens = deref(e, "ensemble").value;
    if (nx) *nx = ens.topology().nx();
    if (ny) *ny = ens.topology().ny();
    if (m) *m = ens.size();
  });
}

cpci_status cpci_ensemble_member(const cpci_ensemble* e, size_t member, double* dst, size_t dst_len) {
  return guarded([&] {
    const auto& ens = deref(e, "ensemble").value;
    if (member >= ens.size())
      throw cpci::InputError("member " + std::to_string(member) + " out of range [0," +
                             std::to_string(ens.size() - 1) + "]");
    auto vals = ens.member(member).values();
    if (!dst || dst_len < vals.size()) throw cpci::InputError("destination buffer too small");
    std::memcpy(dst, vals.data(), vals.size() * sizeof(double));
  });
}

void cpci_ensemble_free(cpci_ensemble* e) { delete e; }

namespace {

std::vector<cpci::CriticalType> classify_checked(const cpci_ensemble* e, size_t member) {
  const auto& ens = deref(e, "ensemble").value;
  if (member >= ens.size())
    throw cpci::InputError("member " + std::to_string(member) + " out of range [0," +
                           std::to_string(ens.size() - 1) + "]");
  return cpci::classify_field(ens.member(member), ens.topology());
}

}  // namespace

cpci_status cpci_classify_member(const cpci_ensemble* e, size_t member, cpci_type* dst, size_t dst_len) {
  return guarded([&] {
    auto types = classify_checked(e, member);
    if (!dst || dst_len < types.size()) throw cpci::InputError("destination buffer too small");
    for (size_t k = 0; k < types.size(); ++k) dst[k] = static_cast<cpci_type>(types[k]);
  });
}

cpci_status cpci_classify_member_csv(const cpci_ensemble* e, size_t member, const char* path) {
  return guarded([&] {
    auto types = classify_checked(e, member);
    write_text(path, [&](std::ostream& os) {
      cpci::write_classification_csv(e->value.topology(), types, os);
    });
  });
}

cpci_status cpci_counts_csv(const cpci_ensemble* e, const char* path) {
  return guarded([&] {
    const auto& ens = deref(e, "ensemble").value;
    auto counts = cpci::count_types(ens);
    write_text(path, [&](std::ostream& os) { cpci::write_counts_csv(ens.topology(), counts, os); });
  });
}

cpci_status cpci_estimate(const cpci_ensemble* e, double gamma, cpci_summary** out) {
  return guarded([&] {
    check_out(out);
    const auto& ens = deref(e, "ensemble").value;
    cpci::ConfidenceLevel level(gamma);
    auto counts = cpci::count_types(ens);
    *out = new cpci_summary{cpci::make_table(ens.topology(), cpci::summarize(counts, level))};
  });
}

cpci_status cpci_summary_load_csv(const char* path, cpci_summary** out) {
  return guarded([&] {
    check_out(out);
    std::istringstream in(cpci::read_file(path_arg(path)));
    *out = new cpci_summary{cpci::read_summary_csv(in)};
  });
}

cpci_status cpci_summary_save_csv(const cpci_summary* s, const char* path) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    write_text(path, [&](std::ostream& os) { cpci::write_summary_csv(t, os); });
  });
}

cpci_status cpci_summary_dims(const cpci_summary* s, size_t* nx, size_t* ny) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    if (nx) *nx = t.nx;
    if (ny) *ny = t.ny;
  });
}

cpci_status cpci_summary_vertex(const cpci_summary* s, size_t i, size_t j, cpci_vertex_summary* out) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    if (!out) throw cpci::InputError("null output");
    if (i >= t.nx || j >= t.ny) throw cpci::InputError("vertex out of range");
    const auto& row = t.at(i, j);
    for (size_t k = 0; k < 3; ++k)
      out->by_type[k] = {row.by_type[k].p_hat, row.by_type[k].p_lower, row.by_type[k].p_upper};
    out->m = t.m;
    out->gamma = t.gamma;
  });
}

cpci_status cpci_summary_describe(const cpci_summary* s, size_t i, size_t j, char* buf, size_t len,
                                  size_t* needed) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    auto text = cpci::describe_vertex(t, i, j);
    if (needed) *needed = text.size() + 1;
    if (buf && len > 0) {
      const size_t n = std::min(len - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

cpci_status cpci_summary_check_degenerate(const cpci_summary* s) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    for (size_t k = 0; k < t.rows.size(); ++k)
      for (const auto& est : t.rows[k].by_type)
        if (est.p_lower != est.p_hat || est.p_upper != est.p_hat)
          throw cpci::InputError("ground-truth rendering needs lower = estimate = upper; vertex (" +
                                 std::to_string(k % t.nx) + "," + std::to_string(k / t.nx) +
                                 ") has a non-degenerate interval");
  });
}

void cpci_summary_free(cpci_summary* s) { delete s; }

cpci_style cpci_default_style(void) {
  cpci::GlyphStyle d;
  return {d.r_max, d.cell, d.arc_stroke, d.margin};
}

cpci_status cpci_render_svg(const cpci_summary* s, const cpci_style* style, const char* path) {
  return guarded([&] {
    const auto& t = deref(s, "summary").value;
    auto svg = cpci::render_map(t, to_style(style));
    cpci::atomic_write(path_arg(path), svg);
  });
}

cpci_status cpci_model_fit(const cpci_ensemble* e, cpci_model** out) {
  return guarded([&] {
    check_out(out);
    *out = new cpci_model{cpci::estimate_moments(deref(e, "ensemble").value)};
  });
}

cpci_status cpci_model_load(const char* path, cpci_model** out) {
  return guarded([&] {
    check_out(out);
    std::istringstream in(cpci::read_file(path_arg(path)));
    *out = new cpci_model{cpci::load_model(in)};
  });
}

cpci_status cpci_model_save(const cpci_model* model, const char* path) {
  return guarded([&] {
    const auto& mm = deref(model, "model").value;
    write_text(path, [&](std::ostream& os) { cpci::save_model(mm, os); });
  });
}

cpci_status cpci_model_sample(const cpci_model* model, size_t m_out, uint64_t seed, cpci_ensemble** out) {
  return guarded([&] {
    check_out(out);
    *out = new cpci_ensemble{cpci::sample_ensemble(deref(model, "model").value, m_out, seed)};
  });
}

cpci_status cpci_model_truth(const cpci_model* model, size_t n_draws, uint64_t seed, double gamma,
                             int collapse, cpci_summary** out) {
  return guarded([&] {
    check_out(out);
    const auto& mm = deref(model, "model").value;
    cpci::ConfidenceLevel level(gamma);
    auto rows = cpci::ground_truth_probabilities(mm, n_draws, seed, level);
    if (collapse) rows = cpci::collapse_to_point(rows);
    *out = new cpci_summary{cpci::make_table(mm.topology(), std::move(rows))};
  });
}

void cpci_model_free(cpci_model* model) { delete model; }

cpci_status cpci_coverage(double p_true, size_t m, double gamma, size_t reps, uint64_t seed,
                          cpci_coverage_report* out) {
  return guarded([&] {
    if (!out) throw cpci::InputError("null output");
    auto r = cpci::coverage_experiment(p_true, m, cpci::ConfidenceLevel(gamma), reps, seed);
    *out = {r.p_true, r.m, r.gamma, r.reps, r.hits, r.empirical_coverage(), r.mean_width};
  });
}

cpci_status cpci_write_file(const char* path, const char* data, size_t len) {
  return guarded([&] {
    if (!data && len) throw cpci::InputError("null data");
    cpci::atomic_write(path_arg(path), std::string_view(data ? data : "", len));
  });
}

}  // extern "C"
