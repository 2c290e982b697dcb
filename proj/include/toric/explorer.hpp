#pragma once

#include <optional>
#include <string>

#include "toric/quotients.hpp"

namespace toric {

/// Rational interval with independently open or closed ends; no upper bound
/// when hi is absent. Both ends open by default.
struct Window {
  Rat lo = 0;
  std::optional<Rat> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Rat& x) const {
    if (lo_closed ? x < lo : x <= lo) return false;
    if (hi) return hi_closed ? x <= *hi : x < *hi;
    return true;
  }
  static Window parse(const std::string& s);  // "0.1:1", "[1/2:1)", "1:"
  std::string str() const;

  friend bool operator==(const Window&, const Window&) = default;
};

struct CyclicSpec {
  long r = 1;
  std::vector<long> weights;
  friend bool operator==(const CyclicSpec&, const CyclicSpec&) = default;
};

/// One enumerated cyclic quotient with its log-quotient pair data.
struct MldRecord {
  CyclicSpec spec;
  int dim = 0;
  Rat mld;
  QVec witness;
  Int cartier_index;
  QVec boundary;             // per sorted ray order of the quotient pair
  bool quasi_reflection = false;  // quotient ramifies in codimension one
  std::string lattice_key;   // canonical overlattice form, the dedupe key
};

/// The log-quotient pair of a record, rebuilt from its spec.
ToricPair record_pair(const MldRecord& rec);

inline constexpr long kDefaultSweepCap = 2000;

struct SweepParams {
  int dim = 2;
  long rmax = 100;
  Window window;        // filter on the record mld; default accepts everything
  bool dedupe = true;
  long rmax_cap = kDefaultSweepCap;
  bool verify = true;   // re-check each record against the quotient law
};

/// All cyclic quotients 1/r(a_1..a_n) for r <= rmax, weights in [0, r)^n in
/// lexicographic order, one record per overlattice when dedupe is on.
/// Parallel over r when built with OpenMP; output identical to the serial
/// reference.
std::vector<MldRecord> enumerate_cyclic(const SweepParams& params);
std::vector<MldRecord> enumerate_cyclic_serial(const SweepParams& params);

struct SpectrumEntry {
  Rat value;
  long multiplicity = 0;   // records attaining the value at the larger bound
  CyclicSpec first_spec;   // earliest record attaining it
  QVec first_witness;
};

struct SpectrumReport {
  Window window;
  long r1 = 0, r2 = 0;
  std::vector<SpectrumEntry> values;  // at bound r2, ascending
  std::vector<Rat> values_r1;         // ascending
  bool stabilized = false;            // value sets at r1 and r2 agree
  long longest_increasing_run = 0;    // over discovery order; diagnostic only
};

SpectrumReport spectrum(const std::vector<MldRecord>& records, const Window& window, long r1, long r2);

struct IndexTableRow {
  Window window;
  std::vector<Int> indices;  // observed Cartier indices at bound r2, ascending
  Int max_index = 0;
  bool grew = false;         // set differs between the two sweep bounds
};

std::vector<IndexTableRow> index_table(const std::vector<MldRecord>& records, const std::vector<Window>& windows,
                                       long r1, long r2);

struct AccumulationCandidate {
  Rat limit;
  bool extrapolated = false;      // exact v = a + c/r fit across the cluster tail
  std::vector<Rat> cluster;       // member values, ascending
  bool matched = false;           // some 2-dim pair with standard coefficients has this mld
  std::string match_description;
};

struct AccumulationReport {
  Rat resolution;
  std::vector<AccumulationCandidate> candidates;
};

/// Exploratory clustering of 3-dimensional mld values against 2-dimensional
/// standard-coefficient models; asserts nothing.
AccumulationReport accumulation_scan(const std::vector<MldRecord>& records, int n, const Rat& resolution,
                                     long match_rmax = 20, long match_coeff_cap = 6);

enum class EmitFormat { csv, json };

// bit-stable emission: fixed field order, rationals as "p/q"
void emit(const std::vector<MldRecord>& records, EmitFormat format, const std::string& path);
void emit(const SpectrumReport& report, EmitFormat format, const std::string& path);
std::vector<MldRecord> read_records_json(const std::string& path);
SpectrumReport read_spectrum_json(const std::string& path);

/// Canonical overlattice key of 1/r(weights) without building the lattice.
std::string overlattice_key(long r, const std::vector<long>& weights);

}  // namespace toric
