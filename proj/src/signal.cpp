#include "aedet/signal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "aedet/rng.hpp"

namespace aedet {

void SampledSignal::validate() const {
    if (samples.empty()) throw std::invalid_argument("signal is empty");
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
        throw std::invalid_argument("sample rate must be positive and finite");
    for (double v : samples)
        if (!std::isfinite(v)) throw std::invalid_argument("signal contains non-finite samples");
}

void AeSourceParams::validate() const {
    if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
    if (arrival < 0.0) throw std::invalid_argument("arrival must be non-negative");
    if (!(decay > 0.0)) throw std::invalid_argument("decay constant must be positive");
    if (!(resonance > 0.0)) throw std::invalid_argument("resonant frequency must be positive");
    if (!(duration > arrival)) throw std::invalid_argument("duration must exceed the arrival");
}

void BandpassSpec::validate(double sample_rate) const {
    if (!(sample_rate > 0.0)) throw std::invalid_argument("sample rate must be positive");
    if (!(low_cut > 0.0) || !(low_cut < high_cut) || !(high_cut < sample_rate / 2.0))
        throw std::invalid_argument("band edges must satisfy 0 < low < high < Nyquist");
    if (!(transition_width > 0.0)) throw std::invalid_argument("transition width must be positive");
    if (low_cut - transition_width / 2.0 <= 0.0)
        throw std::invalid_argument("lower transition band extends below DC");
    if (high_cut + transition_width / 2.0 >= sample_rate / 2.0)
        throw std::invalid_argument("upper transition band extends past Nyquist");
    if (!(stopband_attenuation > 0.0))
        throw std::invalid_argument("stopband attenuation must be positive");
}

SampledSignal synth_ae(const AeSourceParams& params, double sample_rate) {
    params.validate();
    if (!(sample_rate > 0.0)) throw std::invalid_argument("sample rate must be positive");

    const std::size_t n = static_cast<std::size_t>(std::llround(params.duration * sample_rate));
    SampledSignal out;
    out.sample_rate = sample_rate;
    out.samples.resize(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / sample_rate;
        if (t < params.arrival) continue;  // exactly zero before the arrival
        const double dt = t - params.arrival;
        out.samples[i] = params.amplitude * std::exp(-dt / params.decay) *
                         std::sin(2.0 * M_PI * params.resonance * dt);
    }
    return out;
}

double signal_power(const SampledSignal& signal) {
    signal.validate();
    double sum = 0.0;
    for (double v : signal.samples) sum += v * v;
    return sum / static_cast<double>(signal.size());
}

SampledSignal add_awgn(const SampledSignal& signal, double target_snr_db, std::uint64_t seed) {
    if (std::isinf(target_snr_db) && target_snr_db > 0.0) return signal;  // noise disabled

    const double power = signal_power(signal);
    if (power <= 0.0) throw std::invalid_argument("cannot set an SNR on a zero-power signal");

    const double noise_power = power / std::pow(10.0, target_snr_db / 10.0);
    const double sigma = std::sqrt(noise_power);

    SampledSignal out = signal;
    NormalSampler rng(seed);
    for (double& v : out.samples) v += sigma * rng.next();
    return out;
}

namespace {

// zeroth-order modified Bessel function, power series
double bessel_i0(double x) {
    double sum = 1.0, term = 1.0;
    const double q = x * x / 4.0;
    for (int k = 1; k < 64; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

}  // namespace

std::vector<double> design_bandpass_fir(const BandpassSpec& spec, double sample_rate) {
    spec.validate(sample_rate);

    const double att = spec.stopband_attenuation;
    double beta = 0.0;
    if (att > 50.0)
        beta = 0.1102 * (att - 8.7);
    else if (att >= 21.0)
        beta = 0.5842 * std::pow(att - 21.0, 0.4) + 0.07886 * (att - 21.0);

    const double delta_omega = 2.0 * M_PI * spec.transition_width / sample_rate;
    std::size_t taps = static_cast<std::size_t>(std::ceil((att - 8.0) / (2.285 * delta_omega))) + 1;
    if (taps % 2 == 0) ++taps;  // odd length, type-I linear phase
    if (taps < 3) taps = 3;

    // ideal cutoffs at the middle of each transition band
    const double f1 = (spec.low_cut - spec.transition_width / 2.0) / sample_rate;
    const double f2 = (spec.high_cut + spec.transition_width / 2.0) / sample_rate;
    const double mid = static_cast<double>(taps - 1) / 2.0;

    std::vector<double> h(taps);
    const double i0_beta = bessel_i0(beta);
    for (std::size_t k = 0; k < taps; ++k) {
        const double m = static_cast<double>(k) - mid;
        double ideal;
        if (m == 0.0) {
            ideal = 2.0 * (f2 - f1);
        } else {
            ideal = (std::sin(2.0 * M_PI * f2 * m) - std::sin(2.0 * M_PI * f1 * m)) / (M_PI * m);
        }
        const double r = m / mid;
        const double kaiser = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0_beta;
        h[k] = ideal * kaiser;
    }
    return h;
}

SampledSignal bandpass(const SampledSignal& signal, const BandpassSpec& spec) {
    signal.validate();
    const std::vector<double> h = design_bandpass_fir(spec, signal.sample_rate);
    const std::size_t n = signal.size();
    const std::size_t taps = h.size();
    const std::ptrdiff_t delay = static_cast<std::ptrdiff_t>((taps - 1) / 2);

    // y[i] = sum_k h[k] x[i + delay - k], zero outside the frame; the delay
    // shift compensates the linear-phase group delay so the output stays
    // aligned with the input.
    SampledSignal out;
    out.sample_rate = signal.sample_rate;
    out.samples.assign(n, 0.0);
    const double* x = signal.samples.data();
    for (std::size_t i = 0; i < n; ++i) {
        const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(i) + delay;
        std::size_t k_lo = 0, k_hi = taps;
        if (base + 1 > static_cast<std::ptrdiff_t>(n))
            k_lo = static_cast<std::size_t>(base + 1 - static_cast<std::ptrdiff_t>(n));
        if (base < static_cast<std::ptrdiff_t>(taps))
            k_hi = static_cast<std::size_t>(base) + 1;
        double acc = 0.0;
        for (std::size_t k = k_lo; k < k_hi; ++k)
            acc += h[k] * x[static_cast<std::size_t>(base) - k];
        out.samples[i] = acc;
    }
    return out;
}

}  // namespace aedet
