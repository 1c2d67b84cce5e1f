/* Copyright 2026 The polycert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference scan against the OpenMP scan on the same witness range.

#include <benchmark/benchmark.h>

#include "polycert/int_arith.hpp"
#include "polycert/newton.hpp"
#include "polycert/scan.hpp"

namespace {

using namespace polycert;

struct Fixture {
  Polynomial f{64, 0, 56, 0, 14, 0, 1};
  DegreeBound delta = best_delta(f);
  Factorization lead = factorize(Integer(1));

  ScanRequest request(std::uint64_t count) const {
    ScanRequest r;
    r.poly = &f;
    r.delta = delta;
    r.start = 58;
    r.count = count;
    r.leading = &lead;
    return r;
  }
};

const Fixture& fixture() {
  static const Fixture fx;
  return fx;
}

void BM_ScanSerial(benchmark::State& state) {
  const ScanRequest req = fixture().request(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_witnesses_serial(req));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  const ScanRequest req = fixture().request(static_cast<std::uint64_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan_witnesses_parallel(req, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->ArgsProduct({{64, 256}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
