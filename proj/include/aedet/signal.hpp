#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aedet {

/// Uniformly sampled real waveform, amplitudes in volts.
struct SampledSignal {
    std::vector<double> samples;
    double sample_rate = 0.0;  // Hz

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return static_cast<double>(samples.size()) / sample_rate; }

    /// Throws std::invalid_argument if empty, non-finite, or rate <= 0.
    void validate() const;
};

/// Damped-sinusoid source model:
///   u(t) = A exp(-(t-T)/gamma) sin(2 pi v0 (t-T))  for t >= T, else 0.
struct AeSourceParams {
    double amplitude = 1.0;   // A, volts
    double arrival = 5e-3;    // T, seconds
    double decay = 1e-3;      // gamma, seconds
    double resonance = 3e5;   // v0, Hz
    double duration = 45e-3;  // frame length, seconds

    /// Event substantially contained in the frame (arrival + 5*gamma <= duration).
    /// Violations are a warning condition, not an error.
    bool contained() const { return arrival + 5.0 * decay <= duration; }
    void validate() const;
};

/// Linear-phase FIR band-pass description. low_cut/high_cut are the passband
/// edges; each transition band is transition_width wide.
struct BandpassSpec {
    double low_cut = 10e3;              // Hz
    double high_cut = 2200e3;           // Hz
    double transition_width = 50e3;     // Hz
    double stopband_attenuation = 60.0; // dB

    void validate(double sample_rate) const;
};

/// Sample the source model at sample_rate; exactly zero before the arrival.
SampledSignal synth_ae(const AeSourceParams& params, double sample_rate);

/// Mean power (mean of squares) of the waveform.
double signal_power(const SampledSignal& signal);

/// Add white Gaussian noise so that 10*log10(P_signal/P_noise) = target_snr_db,
/// with P_signal taken over the whole frame. Deterministic given seed.
/// target_snr_db = +inf disables the noise (returns the input unchanged).
SampledSignal add_awgn(const SampledSignal& signal, double target_snr_db, std::uint64_t seed);

/// Kaiser-windowed sinc taps for the band-pass spec (odd length, symmetric).
std::vector<double> design_bandpass_fir(const BandpassSpec& spec, double sample_rate);

/// Apply the band-pass FIR with group-delay compensation: output has the same
/// length as the input and events stay time-aligned.
SampledSignal bandpass(const SampledSignal& signal, const BandpassSpec& spec);

}  // namespace aedet
