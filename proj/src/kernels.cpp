#include "rwalk/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {
std::atomic<int> g_workers{0};
}

void set_worker_count(int workers) { g_workers = std::max(0, workers); }

int worker_count() {
  const int w = g_workers.load();
  return w > 0 ? w : omp_get_max_threads();
}

StepLaw StepLaw::from(const WalkParams& params) {
  return {params.p().to_double(), params.q().to_double(), params.r().to_double()};
}

std::vector<double> survival_by_start(int n, int width, const StepLaw& law) {
  if (width < 1) throw Error(ErrorCode::BadBand, "band width must be positive");
  std::vector<double> u(static_cast<std::size_t>(width) + 1, 1.0), v(u.size(), 0.0);
  u.front() = u.back() = 0.0;
  for (int step = 0; step < n; ++step) {
    for (int x = 1; x < width; ++x) v[x] = law.p * u[x + 1] + law.r * u[x] + law.q * u[x - 1];
    std::swap(u, v);
  }
  return u;
}

std::vector<Rational> survival_by_start_exact(int n, int width, const WalkParams& params) {
  if (width < 1) throw Error(ErrorCode::BadBand, "band width must be positive");
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational& r = params.r();
  const bool lazy = params.is_lazy();
  std::vector<Rational> u(static_cast<std::size_t>(width) + 1, Rational(1)), v(u.size());
  u.front() = u.back() = Rational(0);
  for (int step = 0; step < n; ++step) {
    for (int x = 1; x < width; ++x) {
      Rational acc = p * u[x + 1] + q * u[x - 1];
      if (lazy) acc += r * u[x];
      v[x] = std::move(acc);
    }
    std::swap(u, v);
  }
  return u;
}

std::vector<std::vector<double>> survival_table(int n, int first_width, int last_width,
                                                const StepLaw& law, Exec exec) {
  const int count = std::max(0, last_width - first_width + 1);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(count));
  if (exec == Exec::Serial) {
    for (int i = 0; i < count; ++i) out[i] = survival_by_start(n, first_width + i, law);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (int i = 0; i < count; ++i) {
    // Widest bands first so the dynamic schedule balances.
    const int w = last_width - i;
    out[static_cast<std::size_t>(w - first_width)] = survival_by_start(n, w, law);
  }
  return out;
}

double reflected_hit_probability(int n, int a, const StepLaw& law, Reflection reflection) {
  if (a <= 0) return 1.0;
  const double up0 = reflection == Reflection::Strong ? law.p + law.q : law.p;
  const double stay0 = reflection == Reflection::Strong ? law.r : law.q + law.r;
  // Transient states 0 .. a−1; slot a stays 0 as padding.
  std::vector<double> d(static_cast<std::size_t>(a) + 1, 0.0), e(d.size(), 0.0);
  d[0] = 1.0;
  double absorbed = 0.0;
  for (int step = 0; step < n; ++step) {
    const int top = std::min(step + 1, a - 1);
    absorbed += (a >= 2) ? law.p * d[a - 1] : up0 * d[0];
    e[0] = stay0 * d[0] + law.q * d[1];
    if (a >= 2) {
      e[1] = up0 * d[0] + law.r * d[1] + law.q * d[2];
      for (int x = 2; x <= top; ++x) e[x] = law.p * d[x - 1] + law.r * d[x] + law.q * d[x + 1];
    }
    std::swap(d, e);
    if (absorbed > 1.0 - 1e-16) break;
  }
  return std::min(absorbed, 1.0);
}

std::vector<double> reflected_hit_probabilities(int n, int first, int last, const StepLaw& law,
                                                Reflection reflection, Exec exec) {
  const int count = std::max(0, last - first + 1);
  std::vector<double> out(static_cast<std::size_t>(count), 0.0);
  if (exec == Exec::Serial) {
    for (int i = 0; i < count; ++i) out[i] = reflected_hit_probability(n, first + i, law, reflection);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (int i = 0; i < count; ++i) {
    const int a = last - i;
    out[static_cast<std::size_t>(a - first)] = reflected_hit_probability(n, a, law, reflection);
  }
  return out;
}

}  // namespace rwalk
