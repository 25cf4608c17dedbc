#include "aedet/stezcr.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace aedet {

namespace {

std::size_t seconds_to_samples(double seconds, double rate) {
    // round half up; the calibration tables mix microseconds and samples
    return static_cast<std::size_t>(std::floor(seconds * rate + 0.5));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

void StezcrConfig::validate(const SampledSignal& signal) const {
    signal.validate();
    window.validate(signal.size());
    zcr_window.validate(signal.size());
    if (!(itu > 0.0)) throw std::invalid_argument("ITU preset must be positive");
    if (izct_mode == IzctMode::percent_of_noise_level) {
        if (!(izct > 0.0) || izct > 1.0)
            throw std::invalid_argument("percent-mode IZCT must lie in (0, 1]");
    } else if (izct < 0.0) {
        throw std::invalid_argument("absolute IZCT must be non-negative");
    }
    if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
    if (min_event_span < 0.0) throw std::invalid_argument("min event span must be non-negative");

    const std::size_t early_sig = seconds_to_samples(early_noise_span, signal.sample_rate);
    if (early_sig / window.hop < 2 || early_sig / zcr_window.hop < 2)
        throw std::invalid_argument("early-noise span must cover at least 2 series samples");
    const std::size_t longest = std::max(window.length, zcr_window.length);
    if (signal.size() <= longest + early_sig)
        throw std::invalid_argument("signal shorter than analysis window plus early-noise span");
}

double adjust_itu(double preset, const NoiseStats& noise) {
    return preset + noise.level();
}

double compute_itl(double max_core) {
    if (!(max_core > 0.0)) throw std::invalid_argument("core maximum must be positive");
    return 0.368 * max_core;
}

std::vector<AeEvent> detect(const SampledSignal& signal, const StezcrConfig& cfg) {
    cfg.validate(signal);

    const CharacteristicSeries ste_series = ste(signal, cfg.window);
    const CharacteristicSeries dste = ste_derivative(ste_series);
    const CharacteristicSeries zcr_series = stzcr(signal, cfg.zcr_window);

    const std::vector<double>& E = ste_series.values;
    const std::vector<double>& D = dste.values;
    const std::vector<double>& Z = zcr_series.values;
    const std::size_t hop_e = cfg.window.hop;
    const std::size_t hop_z = cfg.zcr_window.hop;
    const std::size_t last_sample = signal.size() - 1;

    const std::size_t early_sig = seconds_to_samples(cfg.early_noise_span, signal.sample_rate);
    const std::size_t early_e = early_sig / hop_e;
    const std::size_t early_z = early_sig / hop_z;

    const auto adjust_izct = [&](const NoiseStats& noise) {
        return cfg.izct_mode == IzctMode::percent_of_noise_level ? cfg.izct * noise.level()
                                                                 : cfg.izct + noise.level();
    };

    NoiseStats noise_e = estimate_noise(ste_series, 0, early_e, cfg.alpha);
    NoiseStats noise_z = estimate_noise(zcr_series, 0, early_z, cfg.alpha);
    double itu_adj = adjust_itu(cfg.itu, noise_e);
    double izct_adj = adjust_izct(noise_z);

    std::vector<AeEvent> events;
    std::optional<AeEvent> pending;  // endpoint clippable by the next onset
    std::size_t search_idx = 0;
    bool first_search = true;

    while (true) {
        // (2) provisional onset. First iteration: plain first STE >= ITU_adjust.
        // Later iterations start at the previous end of core and require an
        // upcrossing so the decaying tail cannot re-trigger.
        std::size_t prov = 0;
        bool found = false;
        if (first_search) {
            for (std::size_t k = search_idx; k < E.size(); ++k) {
                if (E[k] >= itu_adj) {
                    prov = k;
                    found = true;
                    break;
                }
            }
        } else {
            bool below = E[search_idx] < itu_adj;
            for (std::size_t k = search_idx + 1; k < E.size(); ++k) {
                if (E[k] < itu_adj) {
                    below = true;
                } else if (below) {
                    prov = k;
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;

        // (3) backward refinement over the STE derivative
        std::size_t onset_idx = 0;
        bool onset_truncated = true;
        for (std::size_t k = prov; k >= 1; --k) {
            if (D[k] <= 0.0) {
                onset_idx = k;
                onset_truncated = false;
                break;
            }
        }
        const std::size_t onset_sample = onset_idx * hop_e;

        // (7)/(8) resolve the pending endpoint, then adapt thresholds
        if (pending) {
            if (onset_sample <= pending->endpoint) {
                pending->endpoint = onset_sample - 1;  // one sample before the new onset
                pending->truncated = true;
                // no quiet gap left; thresholds carry over unchanged
            } else {
                const std::size_t gap_e0 = pending->endpoint / hop_e + 1;
                const std::size_t gap_e1 = onset_idx;
                const std::size_t gap_z0 = pending->endpoint / hop_z + 1;
                const std::size_t gap_z1 = ceil_div(onset_sample, hop_z);
                if (gap_e1 > gap_e0 + 1 && gap_z1 > gap_z0 + 1) {
                    noise_e = estimate_noise(ste_series, gap_e0, gap_e1 - gap_e0, cfg.alpha);
                    noise_z = estimate_noise(zcr_series, gap_z0, gap_z1 - gap_z0, cfg.alpha);
                    itu_adj = adjust_itu(cfg.itu, noise_e);
                    izct_adj = adjust_izct(noise_z);
                }
            }
            events.push_back(*pending);
            pending.reset();
        }

        // (4) provisional end of core: first STE below the ITU preset
        std::size_t prov_eoc = E.size() - 1;
        for (std::size_t k = prov + 1; k < E.size(); ++k) {
            if (E[k] < cfg.itu) {
                prov_eoc = k;
                break;
            }
        }

        // (5) core maximum, ITL, end of core
        std::size_t max_idx = prov;
        for (std::size_t k = prov; k <= prov_eoc; ++k)
            if (E[k] > E[max_idx]) max_idx = k;
        const double itl = compute_itl(E[max_idx]);

        std::size_t core_idx = E.size() - 1;
        bool core_truncated = true;
        for (std::size_t k = max_idx; k < E.size(); ++k) {
            if (E[k] <= itl) {
                core_idx = k;
                core_truncated = false;
                break;
            }
        }
        const std::size_t core_sample = core_idx * hop_e;

        // (6) ZCR endpoint, scanning forward from the end of core
        std::size_t endpoint_sample = last_sample;
        bool endpoint_truncated = true;
        for (std::size_t j = ceil_div(core_sample, hop_z); j < Z.size(); ++j) {
            if (Z[j] >= izct_adj) {
                endpoint_sample = j * hop_z;
                endpoint_truncated = false;
                break;
            }
        }

        AeEvent ev;
        ev.onset = onset_sample;
        ev.core_end = core_sample;
        ev.endpoint = endpoint_sample;
        ev.truncated = onset_truncated || core_truncated || endpoint_truncated;
        pending = ev;

        search_idx = core_idx;
        first_search = false;
    }
    if (pending) events.push_back(*pending);

    const std::size_t min_span = seconds_to_samples(cfg.min_event_span, signal.sample_rate);
    std::vector<AeEvent> kept;
    kept.reserve(events.size());
    for (const AeEvent& ev : events)
        if (ev.lifespan() >= min_span) kept.push_back(ev);
    return kept;
}

}  // namespace aedet
