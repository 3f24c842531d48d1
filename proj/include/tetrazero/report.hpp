#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetrazero/dehn.hpp"
#include "tetrazero/geometry.hpp"

namespace tetrazero {

// Raised when an independent cross-check disagrees with the exact pipeline.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TetraReport {
    IntEdgeTuple edges{};
    bool valid = false;
    // The fields below are populated only for valid tuples.
    bool dehn_zero = false;
    std::optional<RootOfUnity> matched_root;
    std::optional<int> dimension;
    std::optional<IntEdgeTuple> canonical_form;
    std::optional<std::array<std::int64_t, 3>> opposite_sums;
    std::optional<int> regge_orbit_size;
};

struct CheckOptions {
    bool cross_check = false;
    std::vector<std::int64_t> filter_primes =
        std::vector<std::int64_t>(kDefaultFilterPrimes.begin(), kDefaultFilterPrimes.end());
};

// Full single-tuple pipeline: validity, modular screen, exact Dehn test,
// span dimension, symmetry data. Throws VerificationError if the numeric
// cross-check (when enabled) contradicts the exact verdict.
TetraReport check_tuple(const IntEdgeTuple& edges, const CheckOptions& opts = {});

// Independent numeric oracle: evaluates the edge-weighted angle sum over pi
// at high precision and looks for a small-denominator rational value.
bool numeric_dehn_zero(const IntEdgeTuple& edges, int digits = 60, long max_denominator = 10000);

// One JSON object per report, fixed key order; suitable for JSON-lines output.
std::string report_json(const TetraReport& report);
std::string report_csv_row(const TetraReport& report);
std::string report_csv_header();

struct ScanOptions {
    std::int64_t max_edge = 1;
    int workers = 1;
    enum class Dedupe { None, S4, S4Regge } dedupe = Dedupe::S4;
    bool emit_all = false;  // also report tuples that are invalid or not Dehn-zero
    bool cross_check = false;
    std::vector<std::int64_t> filter_primes =
        std::vector<std::int64_t>(kDefaultFilterPrimes.begin(), kDefaultFilterPrimes.end());
};

// Enumerates integer tuples with entries in [1, max_edge], deduplicates by
// canonical form before testing, and emits reports ordered by (largest entry,
// canonical form, edges). Output is identical for any worker count.
void scan(const ScanOptions& opts, const std::function<void(const TetraReport&)>& emit);

}  // namespace tetrazero
