#pragma once

#include <cstddef>
#include <vector>

#include "aedet/stezcr.hpp"

namespace aedet {

/// Half-open time interval in seconds.
struct Interval {
    double start_s = 0.0;
    double end_s = 0.0;

    double length() const { return end_s - start_s; }
};

/// Reference onset/endpoint times, ordered and non-overlapping.
struct GroundTruth {
    std::vector<Interval> events;

    void validate() const;
};

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total_detected() const { return tp + fp; }
    std::size_t total_truth() const { return tp + fn; }
};

/// One matched detection/truth pair (a true positive).
struct MatchedPair {
    Interval detected;
    Interval truth;
    std::size_t detected_index = 0;
    std::size_t truth_index = 0;
};

struct MatchResult {
    ConfusionCounts counts;
    std::vector<MatchedPair> pairs;
};

/// Greedy one-to-one assignment in time order. A pair matches when the
/// intervals overlap by at least min_overlap of the truth interval;
/// min_overlap = 0 requires any positive overlap. For ordered,
/// non-overlapping interval lists the greedy result is a maximum matching.
MatchResult match_events(const std::vector<Interval>& detected,
                         const GroundTruth& truth, double min_overlap = 0.0);

std::vector<Interval> to_intervals(const std::vector<AeEvent>& events, double sample_rate);

/// The six detection-quality percentages:
///   accuracy = TP/(TP+FP+FN), precision = TP/(TP+FP), sensitivity = TP/(TP+FN),
///   F1 = 2PS/(P+S), FDR = FP/(TP+FP), FNR = FN/(TP+FN).
struct QualityMetrics {
    double accuracy_pct = 0.0;
    double precision_pct = 0.0;
    double sensitivity_pct = 0.0;
    double f1_pct = 0.0;
    double fdr_pct = 0.0;
    double fnr_pct = 0.0;
};

/// Throws std::domain_error when tp+fp == 0 or tp+fn == 0 (the ratios are
/// undefined; callers report that explicitly instead of a NaN).
QualityMetrics quality_metrics(const ConfusionCounts& counts);

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

/// Signed detection errors over matched pairs, in seconds
/// (detected - truth; negative onset error = early detection).
struct ErrorStats {
    MeanStd onset_err;
    MeanStd endpoint_err;
    MeanStd lifespan_err;
};

ErrorStats error_stats(const std::vector<MatchedPair>& pairs);

}  // namespace aedet
