#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "linarb/transversal.hpp"

namespace linarb {

inline constexpr int kSweepVersion = 1;

struct SweepCell {
  int n = 0;
  int k = 0;
  int g_min = 3;
};

struct SweepSpec {
  std::vector<SweepCell> cells;
  int seeds = 5;
  std::uint64_t seed_base = 1;
  bool strict = false;
  std::chrono::milliseconds time_budget{2000};
  int c_max = kDefaultCMax;
  int retries = 10000;
  bool timing = false;  // record wall-clock runtime_ms; otherwise 0
};

class SweepSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Named grid "default": k = 1..3, n <= 40, girth floors the random
// generator reaches within its retry budget.
SweepSpec sweep_preset(std::string_view name);
// {"version": 1, "preset": NAME} or {"version": 1, "cells": [...], ...}.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

struct SweepRecord {
  SweepCell cell;
  std::uint64_t seed = 0;
  std::optional<int> girth;  // empty when generation failed or girth is infinite
  std::string regime_tag;    // empty when no regime applies
  std::optional<int> delta;
  std::optional<int> claimed_bound;
  std::optional<int> achieved_count;
  bool verified = false;
  // ok, overshoot, unverified, exhausted, generation_failed, no_regime, error
  std::string status;
  long long runtime_ms = 0;

  std::optional<bool> paper_feasible;
  std::string transversal_mode;
  std::optional<int> delta_used;
  std::string h_rung;
  std::string message;
  bool flagged = false;
};

// One record per (cell, seed), ordered by cell then seed.
SweepRecord run_instance(const SweepSpec& spec, const SweepCell& cell,
                         std::uint64_t seed);
// Instances run on up to `jobs` OpenMP threads; jobs <= 0 uses the default.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs = 0);
std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec);

nlohmann::ordered_json sweep_record_to_json(const SweepRecord& r);
// {"version": 1, "records": [...]}
nlohmann::ordered_json sweep_to_json(const std::vector<SweepRecord>& records);

}  // namespace linarb
