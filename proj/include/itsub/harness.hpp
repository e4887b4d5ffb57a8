#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "itsub/bcd.hpp"
#include "itsub/types.hpp"

namespace itsub {

/// Constants c0..c{atom_count-1} plus U, closed under -> and & up to
/// max_size (size counts arrow and intersection nodes).
struct UniverseSpec {
  std::size_t atom_count = 2;
  std::size_t max_size = 3;

  friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;
};

/// Every type of the universe once, ordered by size and then by the
/// structural order of Ty.
std::vector<Ty> enumerate_universe(const UniverseSpec& spec);

/// Deterministic in its arguments. Tree height (counting both arrows and
/// intersections) is at most max_depth; each node is an atom, an arrow or an
/// intersection with equal probability until the bound forces an atom.
Ty random_type(std::uint64_t seed, std::size_t atom_count, std::size_t max_depth);

struct SuiteOptions {
  UniverseSpec pairs{2, 3};
  UniverseSpec triples{2, 2};
  std::uint64_t seed = 1;
  std::size_t random_samples = 100000;
  std::size_t random_atoms = 4;
  std::size_t random_max_depth = 5;
  std::size_t bcd_depth = kDefaultBcdSearchDepth;
  unsigned jobs = 1;
  bool check_measure = true;
  /// Failures kept per report; the rest are only counted.
  std::size_t failure_limit = 20;
};

struct SuiteFailure {
  std::string property;
  std::string inputs;
  std::string detail;
  /// Serialized certificate(s) when one is at hand, otherwise empty.
  std::string certificate;
};

struct PropertyTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::map<std::string, PropertyTally> properties;
  std::map<std::string, std::uint64_t> counters;
  std::vector<SuiteFailure> failures;
  double seconds = 0;

  std::uint64_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
};

/// Universes and subtype tables shared between suites run in one process.
class SuiteContext {
 public:
  SuiteContext();
  ~SuiteContext();
  SuiteContext(const SuiteContext&) = delete;
  SuiteContext& operator=(const SuiteContext&) = delete;

  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown name. Results do not depend on
/// options.jobs.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);
SuiteReport run_suite(std::string_view name, const SuiteOptions& options, SuiteContext& context);

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool with_timing = true);
std::string reports_to_text(const std::vector<SuiteReport>& reports, bool with_timing = true);

}  // namespace itsub
