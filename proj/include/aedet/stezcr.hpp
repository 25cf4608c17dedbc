#pragma once

#include <cstddef>
#include <vector>

#include "aedet/short_time.hpp"
#include "aedet/signal.hpp"

namespace aedet {

enum class IzctMode { absolute, percent_of_noise_level };

/// Configuration of the STE-ZCR activity detector.
///
/// itu is the preset Identification Upper Threshold in the STE series' units
/// (v^2 * samples). izct is either an absolute STZCR threshold (per-sample
/// rate) or, in percent mode, a fraction of the measured STZCR noise level.
struct StezcrConfig {
    double itu = 2e-4;
    IzctMode izct_mode = IzctMode::percent_of_noise_level;
    double izct = 0.70;
    double alpha = 4.0;
    double early_noise_span = 2e-3;  // seconds
    WindowSpec window{WindowFamily::hamming, 100, 1};
    WindowSpec zcr_window{WindowFamily::hamming, 100, 1};
    double min_event_span = 0.0;     // seconds

    void validate(const SampledSignal& signal) const;
};

/// One detected hit. Indices are sample indices into the source signal.
/// truncated marks an endpoint (or onset) forced by the frame boundary or by
/// a following onset.
struct AeEvent {
    std::size_t onset = 0;
    std::size_t core_end = 0;
    std::size_t endpoint = 0;
    bool truncated = false;

    std::size_t lifespan() const { return endpoint - onset; }
};

/// ITU_adjust = ITU + (mean + alpha*std) of the early/inter-event STE noise.
double adjust_itu(double preset, const NoiseStats& noise);

/// ITL = 0.368 * STE_max-core (first-order time-constant rule).
/// Throws on a non-positive core maximum.
double compute_itl(double max_core);

// ----------------------------------------------------------------------------
// Detection algorithm
// ----------------------------------------------------------------------------
//
// Per iteration over the STE / STZCR / dSTE series:
//
//  1. Background noise stats over the current quiet segment (the early span
//     at first, later the inter-event gap) give the adjusted thresholds
//       ITU_adjust  = ITU + (mean_STE + alpha*std_STE)
//       IZCT_adjust = IZCT + (mean_ZCR + alpha*std_ZCR)     (absolute mode)
//       IZCT_adjust = IZCT * (mean_ZCR + alpha*std_ZCR)     (percent mode)
//  2. Provisional onset: first STE index with STE >= ITU_adjust. After the
//     first hit the search continues from the end of core and requires an
//     upcrossing (STE must fall below ITU_adjust first), so a decaying tail
//     cannot re-trigger.
//  3. Onset refinement: backward scan of dSTE from the provisional onset to
//     the first index with dSTE <= 0. Reaching the series start flags the
//     event truncated with onset 0.
//  4. Provisional end of core: first index after the provisional onset with
//     STE < ITU (the preset). Missing -> the provisional core extends to the
//     last index.
//  5. ITL = 0.368 * max STE over the provisional core; forward scan from the
//     max to the first STE <= ITL gives the end of core. Missing -> last
//     index, truncated.
//  6. Endpoint: first STZCR index >= IZCT_adjust scanning forward from the
//     end of core. Missing -> last index, truncated.
//  7. Overlap guard: the previous endpoint stays pending until the next
//     onset search resolves; a new onset at or before it clips the pending
//     endpoint to one sample before the new onset and flags it truncated.
//  8. Noise is re-estimated on the inter-event gap (previous endpoint to new
//     onset) before re-adjusting both thresholds; gaps shorter than two
//     series samples keep the previous thresholds.
//
// Events shorter than min_event_span are dropped. Series indices are mapped
// back to signal sample indices through the window hop.

std::vector<AeEvent> detect(const SampledSignal& signal, const StezcrConfig& cfg);

}  // namespace aedet
