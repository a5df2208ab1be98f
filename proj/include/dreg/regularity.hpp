#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dreg/fuchs.hpp"
#include "dreg/rank.hpp"

namespace dreg {

// Random rational point of V(component) with every avoid polynomial nonzero:
// all coordinates but one are random of height <= heightBound (doubling on
// retries), the last is a rational root. Throws MathError("NO_RATIONAL_POINT").
Point generic_point(const MultiPoly& component, const std::vector<MultiPoly>& avoid,
                    std::uint64_t seed, std::int64_t height_bound = 5);

// Rank of in_{(-1,1)} of the ideal recentred at p (all-ones weight).
std::size_t gr_rank_at_point(const DIdeal& ideal, const Point& p);

enum class RecordStatus { Stable, Unstable, Unsampled };
std::string to_string(RecordStatus s);

// chart 0 is the affine space itself; chart k >= 1 is the k-th standard
// chart of P^n with the hyperplane at infinity as V(x_k).
struct ComponentRecord {
  MultiPoly component;
  std::size_t chart = 0;
  std::string label;
  std::vector<Point> points;
  std::vector<std::size_t> gr_ranks;
  std::size_t irr_mult = 0;
  RecordStatus status = RecordStatus::Unsampled;
  std::string note;
  // Filled in by the cross-check: line oracle verdict at the first point.
  std::optional<bool> oracle_regular;
  std::string oracle_note;
};

struct DivisorEntry {
  std::string label;
  MultiPoly poly;
  std::size_t mult = 0;
};

struct Divisor {
  std::vector<DivisorEntry> entries;
  bool is_zero() const { return entries.empty(); }
};

enum class Verdict { Regular, Irregular, Inconclusive };
std::string to_string(Verdict v);

struct RegularityOptions {
  std::size_t points_per_component = 3;
  std::uint64_t seed = 0;
  std::int64_t height_bound = 5;
  bool check_infinity = false;
  // Charts of P^n to inspect (1-based); empty means all of 1..n.
  std::vector<std::size_t> charts;
  // Replaces the codimension-one part of the singular locus when nonempty.
  std::vector<MultiPoly> components;
  std::vector<MultiPoly> avoid;
  // Used before sampling on every affine component they lie on.
  std::vector<Point> points;
  int jobs = 1;
  bool cross_check = false;
};

// One unit of work: a component in some chart with its avoidance set.
struct RecordTask {
  const DIdeal* ideal = nullptr;
  std::size_t rank = 0;
  std::size_t chart = 0;
  std::size_t index = 0;
  MultiPoly component;
  std::string label;
  std::vector<MultiPoly> avoid;
  std::vector<Point> declared;
  // Reused by the cross-check when present.
  const PfaffianSystem* pfaffian = nullptr;
};

ComponentRecord compute_record(const RecordTask& task, const RegularityOptions& options);
// Reference implementation and the OpenMP version; results are identical.
std::vector<ComponentRecord> compute_records_serial(const std::vector<RecordTask>& tasks,
                                                    const RegularityOptions& options);
std::vector<ComponentRecord> compute_records_parallel(const std::vector<RecordTask>& tasks,
                                                      const RegularityOptions& options);

// Avoidance set for `component`: the other components and every listed
// stratum polynomial not divisible by it.
std::vector<MultiPoly> avoidance_for(const MultiPoly& component,
                                     const std::vector<MultiPoly>& components,
                                     const std::vector<MultiPoly>& strata);

struct RegularityReport {
  RankResult rank;
  SingularLocus locus;
  std::vector<ComponentRecord> records;
  bool infinity_checked = false;
  std::vector<std::size_t> charts;
  Divisor divisor;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> caveats;
};

// Affine component records only.
std::vector<ComponentRecord> irregular_support(const DIdeal& ideal,
                                               const RegularityOptions& options);
Divisor irregularity_divisor(const DIdeal& ideal, const RegularityOptions& options);
RegularityReport is_regular(const DIdeal& ideal, const RegularityOptions& options);

Divisor divisor_from_records(const std::vector<ComponentRecord>& records,
                             std::vector<std::string>* caveats = nullptr);
Verdict verdict_from_records(const std::vector<ComponentRecord>& records, bool infinity_checked);

}  // namespace dreg
