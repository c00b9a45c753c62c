#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cet/matrix.hpp"
#include "cet/types.hpp"

namespace cet {

constexpr int kFeatureCount = 19;

// Fixed feature order; every matrix column, CSV column and model artifact
// follows it.
constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "spo2_mean", "spo2_min", "spo2_max",
    "sbp_mean",  "sbp_min",  "sbp_max",
    "map_mean",  "map_min",  "map_max",
    "hr_mean",   "hr_min",   "hr_max",
    "rr_mean",   "rr_min",   "rr_max",
    "creatinine_latest",
    "age",
    "gender_f",  "gender_m",
};

int feature_index(std::string_view name);

// One stay's raw features. Values are meaningful only where present[i];
// age and the gender indicators are always present.
struct FeatureRow {
    std::array<double, kFeatureCount> values{};
    std::array<bool, kFeatureCount> present{};
};

struct FeatureTable {
    std::vector<std::string> stay_ids;
    std::vector<FeatureRow> rows;
};

// July 1 of (anchor_year - anchor_age), the mid-year birth proxy.
Timestamp birth_proxy(int anchor_age, int anchor_year);

// (intime - birth_proxy) / 365.25 days. Throws Error("NegativeAge") when
// intime precedes the proxy.
double compute_age(int anchor_age, int anchor_year, Timestamp intime);

// Same formula without the throw; returns a negative number instead.
double fractional_age(int anchor_age, int anchor_year, Timestamp intime);

// Per-vital (mean, min, max) plus latest creatinine over the half-open
// window [intime, intime + 24h). Events must be sorted by charttime.
struct WindowAggregates {
    struct VitalTriple {
        double mean = 0.0, min = 0.0, max = 0.0;
        bool present = false;
    };
    std::array<VitalTriple, 5> vitals;  // SpO2, SBP, MAP, HR, RR
    double creatinine_latest = 0.0;
    bool creatinine_present = false;
};

WindowAggregates aggregate_window(std::span<const EventRecord> events, Timestamp intime);

FeatureRow build_feature_vector(const StayRecord& stay, const WindowAggregates& agg);

FeatureTable featurize_cohort(const Cohort& cohort);

struct ImputationStats {
    std::array<double, kFeatureCount> median{};
};

struct ScalingStats {
    std::array<double, kFeatureCount> mean{};
    std::array<double, kFeatureCount> stddev{};  // population convention (divide by n)
};

// Median of present values per feature; an even count averages the two
// central order statistics. Throws Error("AllMissingFeature") if a feature
// has no present value.
ImputationStats fit_imputation(std::span<const FeatureRow> train_rows);

// Missing entries replaced by the training median; output has no missing
// markers left.
Matrix apply_imputation(std::span<const FeatureRow> rows, const ImputationStats& stats);

ScalingStats fit_scaling(const Matrix& train);

// Z-score per feature; constant features (stddev 0) map to 0.
Matrix apply_scaling(const Matrix& rows, const ScalingStats& stats);

// features.csv: stay_id, the 19 features, then 19 miss_<feature> flags.
void write_features_csv(std::ostream& os, const FeatureTable& table);
FeatureTable read_features_csv(std::istream& in);

}  // namespace cet
