#pragma once

// Float inner loops that dominate large-n runtimes. Each kernel comes in a
// serial reference form and an OpenMP form; both compute every output slot
// with the same operation sequence, so their results are bitwise identical.

#include <vector>

#include "rwalk/rational.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

enum class Exec { Serial, Parallel };

enum class Reflection { Strong, Weak };

struct StepLaw {
  double p;
  double q;
  double r;

  static StepLaw from(const WalkParams& params);
};

/// u[x] = P{walk started at x stays in the open interval (0, width) for n
/// steps}, for x = 0..width (u[0] = u[width] = 0). Backward DP.
std::vector<double> survival_by_start(int n, int width, const StepLaw& law);
std::vector<Rational> survival_by_start_exact(int n, int width,
                                              const WalkParams& params);

/// survival_by_start for every width in [first_width, last_width];
/// result[w - first_width] is the vector for width w.
std::vector<std::vector<double>> survival_table(int n, int first_width,
                                                int last_width,
                                                const StepLaw& law, Exec exec);

/// P{M_n >= a} for the reflected walk started at 0, a = first..last.
/// Absorbing-chain forward iteration; stops early once the absorbed mass
/// exceeds 1 - 1e-16.
double reflected_hit_probability(int n, int a, const StepLaw& law,
                                 Reflection reflection);
std::vector<double> reflected_hit_probabilities(int n, int first, int last,
                                                const StepLaw& law,
                                                Reflection reflection, Exec exec);

/// Sets the OpenMP worker count used by Exec::Parallel; 0 restores the
/// runtime default.
void set_worker_count(int workers);
int worker_count();

}  // namespace rwalk
