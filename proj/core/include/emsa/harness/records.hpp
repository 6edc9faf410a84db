#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "emsa/calculus.hpp"
#include "emsa/exponents.hpp"
#include "emsa/geometry.hpp"
#include "emsa/spectral.hpp"

namespace emsa::harness {

using ordered_json = nlohmann::ordered_json;

/// Wilson 95% score interval; contains the point estimate by construction.
struct ProbabilityEstimate {
  int successes = 0;
  int trials = 0;
  double p_hat = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> compared_bound;

  double half_width() const { return (hi - lo) / 2.0; }
};

ProbabilityEstimate wilson_estimate(int successes, int trials);

/// Ordered sink for per-trial records. Writers receive records in trial
/// order regardless of which worker finished first.
class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void write(int trial_index, ordered_json record) = 0;
};

class NullSink : public RecordSink {
 public:
  void write(int, ordered_json) override {}
};

class MemorySink : public RecordSink {
 public:
  void write(int trial_index, ordered_json record) override;
  const std::map<int, ordered_json>& records() const { return records_; }

 private:
  std::mutex mutex_;
  std::map<int, ordered_json> records_;
};

/// JSON-lines writer: one object per line, stable key order, flushed as the
/// contiguous prefix of trial indices completes so an interruption loses at
/// most the trials still in flight.
class JsonlWriter : public RecordSink {
 public:
  explicit JsonlWriter(const std::string& path);
  void write(int trial_index, ordered_json record) override;
  int written() const { return next_; }

 private:
  void flush_ready();
  std::mutex mutex_;
  std::ofstream out_;
  std::map<int, ordered_json> pending_;
  int next_ = 0;
};

/// Shifts trial indices so sweeps can share one contiguous writer.
class OffsetSink : public RecordSink {
 public:
  OffsetSink(RecordSink& inner, int offset) : inner_(inner), offset_(offset) {}
  void write(int trial_index, ordered_json record) override {
    inner_.write(trial_index + offset_, std::move(record));
  }

 private:
  RecordSink& inner_;
  int offset_;
};

/// RFC-4180 field quoting.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

ordered_json to_record(const ProbabilityEstimate& est);
ordered_json to_record(const spectral::LocalizationVerdict& verdict);
ordered_json to_record(const spectral::MatchReport& report);
ordered_json to_record(const calculus::BoundReport& report);
ordered_json to_record(const geometry::SiteSet& sites);
ordered_json to_record(const geometry::CoverSpec& cover);
ordered_json to_record(const geometry::BufferedSubset& buffered);
ordered_json to_record(const exponents::ScaleSchedule& schedule);
ordered_json to_record(const exponents::ExponentSet& exps);

}  // namespace emsa::harness
