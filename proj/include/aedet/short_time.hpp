#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aedet/signal.hpp"

namespace aedet {

enum class WindowFamily { rectangular, hamming, hann };

WindowFamily window_family_from_name(const std::string& name);
const char* window_family_name(WindowFamily family);

/// Short-time analysis window: family, length N, hop T (n_hat = k*T).
/// hop = 1 is the accuracy default.
struct WindowSpec {
    WindowFamily family = WindowFamily::hamming;
    std::size_t length = 100;  // N, samples
    std::size_t hop = 1;       // T, samples

    /// Weights w(j) for j = n_hat - m, j = 0..N-1. Hamming uses the standard
    /// 0.54/0.46 coefficients; windows are not normalized to unit energy.
    std::vector<double> weights() const;

    void validate(std::size_t signal_length) const;
};

enum class SeriesKind { ste, stzcr, ste_deriv, envelope, ratio };

/// A per-window derived sequence aligned to its source signal:
/// values[i] corresponds to source sample origin_offset + i*hop.
struct CharacteristicSeries {
    std::vector<double> values;
    SeriesKind kind = SeriesKind::ste;
    std::size_t hop = 1;
    std::size_t origin_offset = 0;

    std::size_t size() const { return values.size(); }
    std::size_t sample_index(std::size_t i) const { return origin_offset + i * hop; }
};

/// Background-noise summary of a series slice; level = mean + alpha*std.
struct NoiseStats {
    double mean = 0.0;
    double stddev = 0.0;  // population
    double alpha = 0.0;

    double level() const { return mean + alpha * stddev; }
};

/// sgn per the detector's convention: +1 for x >= 0, -1 otherwise.
inline int sgn(double x) { return x >= 0.0 ? 1 : -1; }

/// Short-time energy: values[k] = sum_{m=n_hat-N+1..n_hat} x(m)^2 w(n_hat-m),
/// n_hat = k*hop, with left zero-extension. Series length = ceil(L/hop).
CharacteristicSeries ste(const SampledSignal& signal, const WindowSpec& win);

/// First difference of an STE series: d[0] = 0, d[i] = s[i] - s[i-1].
CharacteristicSeries ste_derivative(const CharacteristicSeries& series);

/// Short-time zero-crossing rate per sample:
/// values[k] = (1/2N) sum |sgn(x[m]) - sgn(x[m-1])| w(n_hat-m), in [0,1].
/// Left zero-extension; zero samples count as positive sign.
CharacteristicSeries stzcr(const SampledSignal& signal, const WindowSpec& win);

/// Crossings per M = tau*F_s samples from a per-sample rate.
double zcr_normalize(double z_per_sample, double interval_tau_s, double sample_rate);

/// Population mean/std over series values [start, start+span); span >= 2.
NoiseStats estimate_noise(const CharacteristicSeries& series, std::size_t start,
                          std::size_t span, double alpha);

/// O(L) causal moving sum of squares over a trailing window (left
/// zero-extension), the sliding-sum path for rectangular STE with hop 1.
/// The running accumulator is refreshed by exact re-summation every
/// 1024 steps, keeping it within 1e-12 relative of the direct form.
std::vector<double> moving_sum_squares(std::span<const double> x, std::size_t window);

}  // namespace aedet
