#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical kernels or classification code.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) s += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Integral of t^(a-1) (1-t)^(b-1) over [lo, hi] within [0, 1/2]. When a < 1
// the substitution t = u^(1/a) removes the singularity at the origin:
//   t^(a-1) dt = (1/a) du.
// Otherwise t = u^2 gives 2 u^(2a-1) du, smooth for integer and half-integer a.
inline double beta_kernel_left(double lo, double hi, double a, double b, int panels) {
  if (hi <= lo) return 0.0;
  if (a >= 1.0) {
    auto w = [=](double u) { return 2.0 * std::pow(u, 2.0 * a - 1.0) * std::pow(1.0 - u * u, b - 1.0); };
    return simpson(w, std::sqrt(lo), std::sqrt(hi), panels);
  }
  auto g = [=](double u) { return std::pow(1.0 - std::pow(u, 1.0 / a), b - 1.0) / a; };
  return simpson(g, std::pow(lo, a), std::pow(hi, a), panels);
}

// Beta(a, b) CDF by quadrature, splitting at 1/2 so each endpoint singularity
// is handled on its own side.
inline double beta_cdf(double x, double a, double b, int panels = 20000) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double left = beta_kernel_left(0.0, 0.5, a, b, panels);
  const double right = beta_kernel_left(0.0, 0.5, b, a, panels);  // mirrored
  double part;
  if (x <= 0.5)
    part = beta_kernel_left(0.0, x, a, b, panels);
  else
    part = left + right - beta_kernel_left(0.0, 1.0 - x, b, a, panels);
  return part / (left + right);
}

// Quantile by plain bisection on the quadrature CDF.
inline double beta_quantile(double q, double a, double b) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (beta_cdf(mid, a, b) < q)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double binomial_pmf(std::size_t c, std::size_t m, double p) {
  double logc = std::lgamma(m + 1.0) - std::lgamma(c + 1.0) - std::lgamma(m - c + 1.0);
  if (p == 0.0) return c == 0 ? 1.0 : 0.0;
  if (p == 1.0) return c == m ? 1.0 : 0.0;
  return std::exp(logc + c * std::log(p) + (m - c) * std::log1p(-p));
}

// Classification by geometry: link vertices are the grid neighbours joined to
// v by a triangulation edge; the higher and lower parts of the link are split
// into connected components with a flood fill over triangulation edges.
// Returns 0 = min, 1 = max, 2 = saddle, 3 = regular.
inline int classify(const std::vector<double>& f, std::size_t nx, std::size_t ny, std::size_t i,
                    std::size_t j) {
  auto adjacent = [](long di, long dj) {
    return (di == 1 && dj == 0) || (di == -1 && dj == 0) || (di == 0 && dj == 1) ||
           (di == 0 && dj == -1) || (di == 1 && dj == 1) || (di == -1 && dj == -1);
  };
  auto higher = [&](std::size_t u, std::size_t v) {
    return f[u] > f[v] || (f[u] == f[v] && u > v);
  };
  const std::size_t v = j * nx + i;
  std::vector<std::size_t> link;
  std::vector<long> li, lj;
  for (long dj = -1; dj <= 1; ++dj)
    for (long di = -1; di <= 1; ++di) {
      if (!adjacent(di, dj)) continue;
      long a = static_cast<long>(i) + di, b = static_cast<long>(j) + dj;
      if (a < 0 || b < 0 || a >= static_cast<long>(nx) || b >= static_cast<long>(ny)) continue;
      link.push_back(static_cast<std::size_t>(b) * nx + static_cast<std::size_t>(a));
      li.push_back(a);
      lj.push_back(b);
    }
  std::vector<int> up(link.size());
  int n_up = 0;
  for (std::size_t k = 0; k < link.size(); ++k) {
    up[k] = higher(link[k], v) ? 1 : 0;
    n_up += up[k];
  }
  if (n_up == static_cast<int>(link.size())) return 0;
  if (n_up == 0) return 1;
  std::vector<int> comp(link.size(), -1);
  int n_comp = 0;
  for (std::size_t s = 0; s < link.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = n_comp;
    while (!stack.empty()) {
      auto k = stack.back();
      stack.pop_back();
      for (std::size_t t = 0; t < link.size(); ++t)
        if (comp[t] < 0 && up[t] == up[k] && adjacent(li[t] - li[k], lj[t] - lj[k])) {
          comp[t] = n_comp;
          stack.push_back(t);
        }
    }
    ++n_comp;
  }
  return n_comp > 2 ? 2 : 3;
}

// Unbiased sample covariance between vertices u and v, straight from the data.
inline double sample_covariance(const std::vector<std::vector<double>>& members, std::size_t u,
                                std::size_t v) {
  const double m = static_cast<double>(members.size());
  double mu = 0.0, mv = 0.0;
  for (const auto& f : members) {
    mu += f[u];
    mv += f[v];
  }
  mu /= m;
  mv /= m;
  double s = 0.0;
  for (const auto& f : members) s += (f[u] - mu) * (f[v] - mv);
  return s / (m - 1.0);
}

// Small xorshift generator for test inputs, independent of the library RNG.
struct TestRng {
  std::uint64_t s;
  explicit TestRng(std::uint64_t seed) : s(seed * 2654435761ULL + 0x9E3779B97F4A7C15ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

}  // namespace oracle
