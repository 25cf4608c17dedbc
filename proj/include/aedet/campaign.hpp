#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aedet/baselines.hpp"
#include "aedet/evaluation.hpp"
#include "aedet/signal.hpp"
#include "aedet/stezcr.hpp"

namespace aedet {

/// Synthetic benchmark description: a stream of generator events with known
/// onset/endpoint truth, a floor-noise level, and optional SNR rounds.
struct CampaignSpec {
    std::vector<std::string> methods{"ste-zcr"};
    std::size_t n_events = 100;
    double amp_min = 0.1;          // volts
    double amp_max = 1.0;
    double gamma_min = 0.5e-3;     // seconds
    double gamma_max = 3e-3;
    double freq_min = 100e3;       // Hz
    double freq_max = 500e3;
    double sample_rate = 5e6;      // Hz
    double segment_s = 45e-3;      // one segment per event
    double arrival_s = 5e-3;       // nominal arrival within its segment
    double arrival_jitter_s = 0.5e-3;
    double snr_floor_db = 27.1;    // +inf = noiseless stream
    std::vector<double> snr_rounds_db{};  // total-SNR targets beyond the clean round
    std::uint64_t seed = 1;
    double min_overlap = 0.0;

    StezcrConfig stezcr{};
    IaConfig ia{};
    StaLtaConfig stalta{};
    AicConfig aic{};

    void validate() const;
};

struct SynthStream {
    SampledSignal clean;        // floor noise included
    GroundTruth truth;
    std::vector<AeSourceParams> sources;
    double floor_sigma = 0.0;   // std of the injected floor noise, volts
};

/// Build the campaign stream deterministically from the spec seed.
/// Truth endpoint per event: arrival + gamma*ln(A/floor_sigma) (the instant
/// the model envelope decays to the floor-noise std), clamped to the segment;
/// arrival + 10*gamma when the stream is noiseless.
SynthStream make_campaign_stream(const CampaignSpec& spec);

/// Degrade the clean stream to a total SNR of round_db given that floor_db of
/// noise is already present: injected power = P * (10^(-r/10) - 10^(-f/10)).
SampledSignal apply_round_noise(const SampledSignal& clean, double clean_power,
                                double floor_db, double round_db, std::uint64_t seed);

/// One method x round cell of an evaluation report. Quality metrics and error
/// stats are absent when undefined (no detections or no truth / no pairs).
struct CellResult {
    std::string method;
    std::string round_label;      // "clean" or the round's dB value
    double round_snr_db = 0.0;    // +inf for the clean round
    std::size_t n_detected = 0;
    std::size_t n_truth = 0;
    ConfusionCounts counts;
    std::optional<QualityMetrics> quality;
    std::optional<ErrorStats> errors;
    double time_per_frame_s = 0.0;  // wall clock around detect() only
    double time_per_event_s = 0.0;  // time_per_frame / max(1, n_truth)
};

struct EvalReport {
    std::vector<CellResult> cells;
};

std::vector<AeEvent> run_method(const std::string& method, const SampledSignal& signal,
                                const CampaignSpec& spec);

/// Run every method x round cell. Cells may execute on up to `threads`
/// workers; the report content is identical for any thread count
/// (timings excluded).
EvalReport run_campaign(const CampaignSpec& spec, unsigned threads = 1);

}  // namespace aedet
