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

#include "polycert/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#include <omp.h>

#include "polycert/criteria.hpp"

namespace polycert {

namespace {

void absorb(WitnessResult& out, CriterionOutcome r) {
  if (r.certified()) {
    out.certificates.push_back(std::move(*r.certificate));
  } else if (r.status == CriterionStatus::Inconclusive) {
    out.inconclusive = true;
  }
}

ScanResult merge(std::vector<WitnessResult>& slots, std::uint64_t stop, std::uint64_t count) {
  ScanResult out;
  const std::uint64_t last = stop < count ? stop + 1 : count;
  out.evaluated = last;
  if (stop < count) out.stopped_at = stop;
  for (std::uint64_t i = 0; i < last; ++i) {
    if (slots[i].inconclusive) ++out.inconclusive;
    for (auto& c : slots[i].certificates) out.certificates.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool WitnessResult::irreducible() const {
  for (const auto& c : certificates) {
    if (c.bound == 1) return true;
  }
  return false;
}

WitnessResult evaluate_witness(const ScanRequest& req, const Integer& m) {
  WitnessResult out;
  WitnessContext ctx(*req.poly, m, req.budget, req.leading);
  if (req.criteria & kT1) absorb(out, check_theorem1(ctx));
  if (req.criteria & kT2) absorb(out, check_theorem2(ctx));
  if (req.criteria & kT3) absorb(out, check_theorem3(ctx, req.delta));
  if (req.criteria & kT4) absorb(out, check_theorem4(ctx, req.delta));
  return out;
}

ScanResult scan_witnesses_serial(const ScanRequest& req) {
  std::vector<WitnessResult> slots(req.count);
  std::uint64_t stop = req.count;
  for (std::uint64_t i = 0; i < req.count; ++i) {
    slots[i] = evaluate_witness(req, req.start + to_integer(i));
    if (slots[i].irreducible()) {
      stop = i;
      break;
    }
  }
  return merge(slots, stop, req.count);
}

ScanResult scan_witnesses_parallel(const ScanRequest& req, int threads) {
  std::vector<WitnessResult> slots(req.count);
  std::atomic<std::uint64_t> stop{req.count};
  std::exception_ptr failure;
  std::uint64_t failure_index = req.count;
  std::mutex failure_mutex;
  const auto count = static_cast<std::int64_t>(req.count);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

  // Witnesses below the final stop index are never skipped: stop only
  // decreases, and a witness is skipped only if it lies above the current
  // value. The merged result therefore equals the serial one.
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (idx > stop.load(std::memory_order_relaxed)) continue;
    try {
      slots[idx] = evaluate_witness(req, req.start + to_integer(idx));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (idx < failure_index) {
        failure = std::current_exception();
        failure_index = idx;
      }
      continue;
    }
    if (slots[idx].irreducible()) {
      std::uint64_t cur = stop.load(std::memory_order_relaxed);
      while (idx < cur && !stop.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
      }
    }
  }
  // The serial scan would have hit the same failure only if it lies at or
  // before the stop witness.
  const std::uint64_t final_stop = stop.load();
  if (failure && failure_index <= final_stop) std::rethrow_exception(failure);
  return merge(slots, final_stop, req.count);
}

}  // namespace polycert
