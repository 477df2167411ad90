// Copyright 2026 The dicke-mps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the parallel kernels against their single-threaded reference
// implementations on mid-sized instances and reports timings plus the
// largest amplitude difference between the two routes.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dicke/circuit.hpp"
#include "dicke/mps.hpp"

namespace {

double time_ms(const std::function<void()>& work, int repetitions = 3) {
  double best = 1e300;
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void set_threads(int count) {
#ifdef _OPENMP
  omp_set_num_threads(count);
#else
  (void)count;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void print_row(const char* workload, const char* variant, double ms,
               double baseline_ms, double diff) {
  std::printf("%-26s %-22s %9.2f ms  %6.2fx  max|diff| %.2e\n", workload,
              variant, ms, baseline_ms / ms, diff);
}

void bench_contract(int n, int k, bool with_reference) {
  const auto chain = dicke::mps::qubit_chain(n, k);
  char label[64];
  std::snprintf(label, sizeof(label), "contract n=%d k=%d", n, k);

  dicke::DenseState sweep1;
  set_threads(1);
  const double t_sweep1 = time_ms([&] { sweep1 = dicke::mps::contract(chain); });

  set_threads(max_threads());
  dicke::DenseState sweepN;
  const double t_sweepN = time_ms([&] { sweepN = dicke::mps::contract(chain); });

  double t_base = t_sweep1;
  if (with_reference) {
    dicke::DenseState ref;
    const double t_ref =
        time_ms([&] { ref = dicke::mps::reference::contract(chain); });
    t_base = t_ref;
    print_row(label, "reference (serial)", t_ref, t_base, 0.0);
    print_row(label, "sweep, 1 thread", t_sweep1, t_base,
              dicke::max_abs_diff(sweep1.amplitudes, ref.amplitudes));
  } else {
    print_row(label, "sweep, 1 thread", t_sweep1, t_base, 0.0);
  }
  print_row(label, "sweep, max threads", t_sweepN, t_base,
            dicke::max_abs_diff(sweepN.amplitudes, sweep1.amplitudes));
}

void bench_simulate(int n, int k, bool with_reference) {
  const auto description = dicke::circuit::build_circuit(n, k);
  char label[64];
  std::snprintf(label, sizeof(label), "simulate n=%d k=%d", n, k);

  dicke::circuit::HybridState kernel1;
  set_threads(1);
  const double t_kernel1 =
      time_ms([&] { kernel1 = dicke::circuit::simulate(description); });

  set_threads(max_threads());
  dicke::circuit::HybridState kernelN;
  const double t_kernelN =
      time_ms([&] { kernelN = dicke::circuit::simulate(description); });

  double t_base = t_kernel1;
  if (with_reference) {
    dicke::circuit::HybridState ref;
    const double t_ref = time_ms(
        [&] { ref = dicke::circuit::reference::simulate(description); });
    t_base = t_ref;
    print_row(label, "reference (serial)", t_ref, t_base, 0.0);
    print_row(label, "sliced, 1 thread", t_kernel1, t_base,
              dicke::max_abs_diff(kernel1.amplitudes, ref.amplitudes));
  } else {
    print_row(label, "sliced, 1 thread", t_kernel1, t_base, 0.0);
  }
  print_row(label, "sliced, max threads", t_kernelN, t_base,
            dicke::max_abs_diff(kernelN.amplitudes, kernel1.amplitudes));
}

}  // namespace

int main() {
  std::printf("hardware threads: %d\n\n", max_threads());
  bench_contract(12, 6, true);
  bench_contract(16, 8, false);
  std::printf("\n");
  bench_simulate(12, 6, true);
  bench_simulate(16, 8, false);
  return 0;
}
