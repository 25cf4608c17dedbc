#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aedet/short_time.hpp"
#include "aedet/signal.hpp"
#include "aedet/stezcr.hpp"

namespace aedet {

/// Instantaneous-Amplitude detector: fixed voltage threshold on the Hilbert
/// envelope plus the classic timer pair. HDT is the longest below-threshold
/// gap tolerated inside one hit; HLT is the dead time after a hit closes.
struct IaConfig {
    double threshold = 3e-3;  // volts
    double hdt = 1e-3;        // seconds
    double hlt = 10e-3;       // seconds

    void validate() const;
};

struct StaLtaConfig {
    double trigger = 5e-4;
    double detrigger = 9e-5;
    double sta_span = 75e-6;   // seconds
    double lta_span = 1.0;     // seconds
    double pre_event = 15e-6;  // seconds
    double post_event = 10e-3; // seconds

    void validate() const;
};

/// Two-step AIC picker. The coarse trigger runs on the STA/LTA ratio series;
/// window1 = [trigger - window1_span, trigger + end_delay1] feeds the first
/// pick, window2 = [pick - start_delay2, pick + end_delay2] the refinement.
/// weighting_r mirrors the calibration-table vocabulary; the ratio CF does
/// not consume it.
struct AicConfig {
    double coarse_threshold = 2e-1;
    double window1_span = 1.5e-3;  // seconds
    double window2_span = 110e-6;  // seconds
    double start_delay2 = 100e-6;  // seconds
    double end_delay1 = 25e-6;     // seconds
    double end_delay2 = 10e-6;     // seconds
    double weighting_r = 4.0;
    double hdt = 100e-6;           // seconds
    double hlt = 10e-3;            // seconds
    double sta_span = 75e-6;       // seconds, for the coarse CF
    double lta_span = 1.0;         // seconds, for the coarse CF

    void validate() const;
};

/// Magnitude of the analytic signal (full-length FFT Hilbert transform).
/// Requires length >= 8. Edge samples carry transform ripple.
CharacteristicSeries envelope(const SampledSignal& signal);

/// STA/LTA ratio of trailing moving averages of x^2, zero during the LTA
/// warm-up and wherever the LTA is exactly zero.
CharacteristicSeries stalta_ratio(const SampledSignal& signal,
                                  std::size_t sta_len, std::size_t lta_len);

std::vector<AeEvent> ia_detect(const SampledSignal& signal, const IaConfig& cfg);

std::vector<AeEvent> stalta_detect(const SampledSignal& signal, const StaLtaConfig& cfg);

/// Two-segment variance change point: argmin over splits s of
///   AIC(s) = s*ln(var(x[0..s-1])) + (L-s-1)*ln(var(x[s..L-1]))
/// with variances floored at 1e-20. Returns the first sample of the right
/// segment. Throws on an all-constant slice.
std::size_t aic_pick(std::span<const double> slice);

std::vector<AeEvent> aic_detect(const SampledSignal& signal, const AicConfig& cfg);

}  // namespace aedet
