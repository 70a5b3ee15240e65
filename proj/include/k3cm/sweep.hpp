#pragma once

/* Deterministic property-test grids over the library invariants. Case lists
   are enumerated in sorted key order before running, cells are pure calls
   distributed over a small worker pool, and results merge back in key order
   regardless of scheduling. Randomized grids derive every case from its own
   fixed-seed generator, so neither the worker count nor the interleaving
   changes the outcome. */

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace k3cm {

struct SweepResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  // first few failing cells as "key: detail", in key order
  std::vector<std::string> failure_samples;
  double seconds = 0.0;
};

std::vector<std::string> sweep_names();

// workers <= 0 selects the K3CM_WORKERS override when set, else the hardware
// concurrency (the only environment knob the tool reads)
int resolve_workers(int requested);

SweepResult run_sweep(const std::string& name, int workers = 0);

struct SweepCase {
  std::string key;
  // empty result = pass; a message describes the failure
  std::function<std::optional<std::string>()> run;
};

// shared pool runner; cases must already be in key order
SweepResult run_cases(const std::string& name, std::vector<SweepCase> cases,
                      int workers);

}  // namespace k3cm
