#include "aedet/short_time.hpp"

#include <cmath>
#include <stdexcept>

namespace aedet {

WindowFamily window_family_from_name(const std::string& name) {
    if (name == "rectangular" || name == "rect") return WindowFamily::rectangular;
    if (name == "hamming") return WindowFamily::hamming;
    if (name == "hann") return WindowFamily::hann;
    throw std::invalid_argument("unknown window family: " + name);
}

const char* window_family_name(WindowFamily family) {
    switch (family) {
        case WindowFamily::rectangular: return "rectangular";
        case WindowFamily::hamming: return "hamming";
        case WindowFamily::hann: return "hann";
    }
    return "?";
}

std::vector<double> WindowSpec::weights() const {
    std::vector<double> w(length, 1.0);
    if (family == WindowFamily::rectangular || length == 1) return w;
    const double denom = static_cast<double>(length - 1);
    for (std::size_t j = 0; j < length; ++j) {
        const double c = std::cos(2.0 * M_PI * static_cast<double>(j) / denom);
        w[j] = (family == WindowFamily::hamming) ? 0.54 - 0.46 * c : 0.5 * (1.0 - c);
    }
    return w;
}

void WindowSpec::validate(std::size_t signal_length) const {
    if (length == 0) throw std::invalid_argument("window length must be positive");
    if (hop == 0 || hop >= length)
        throw std::invalid_argument("window hop must satisfy 1 <= hop < length");
    if (length > signal_length)
        throw std::invalid_argument("window longer than signal");
}

namespace {

// Windowed sum of src against the reversed weights, n_hat = k*hop, with left
// zero-extension. Shared kernel for STE (src = x^2) and STZCR (src = sign
// diffs). Each window is summed independently so hop-T output equals the
// hop-1 output downsampled by T, bit for bit.
std::vector<double> windowed_sum(const std::vector<double>& src, const WindowSpec& win) {
    const std::size_t n = src.size();
    const std::size_t N = win.length;
    std::vector<double> w = win.weights();
    // wr[i] multiplies src[n_hat - N + 1 + i]: wr[i] = w[N-1-i]
    std::vector<double> wr(N);
    for (std::size_t i = 0; i < N; ++i) wr[i] = w[N - 1 - i];

    const std::size_t count = (n + win.hop - 1) / win.hop;  // ceil(L/hop)
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n_hat = k * win.hop;
        double acc = 0.0;
        if (n_hat + 1 >= N) {
            const double* s = src.data() + (n_hat + 1 - N);
            for (std::size_t i = 0; i < N; ++i) acc += s[i] * wr[i];
        } else {
            // left boundary: samples before the frame are zero
            const std::size_t skip = N - 1 - n_hat;
            for (std::size_t i = skip; i < N; ++i) acc += src[i - skip] * wr[i];
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

CharacteristicSeries ste(const SampledSignal& signal, const WindowSpec& win) {
    signal.validate();
    win.validate(signal.size());

    std::vector<double> sq(signal.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = signal.samples[i] * signal.samples[i];

    CharacteristicSeries out;
    out.values = windowed_sum(sq, win);
    out.kind = SeriesKind::ste;
    out.hop = win.hop;
    out.origin_offset = 0;
    return out;
}

CharacteristicSeries ste_derivative(const CharacteristicSeries& series) {
    if (series.kind != SeriesKind::ste)
        throw std::invalid_argument("ste_derivative expects an STE series");
    if (series.size() < 2)
        throw std::invalid_argument("ste_derivative needs at least two values");

    CharacteristicSeries out;
    out.values.resize(series.size());
    out.values[0] = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i)
        out.values[i] = series.values[i] - series.values[i - 1];
    out.kind = SeriesKind::ste_deriv;
    out.hop = series.hop;
    out.origin_offset = series.origin_offset;
    return out;
}

CharacteristicSeries stzcr(const SampledSignal& signal, const WindowSpec& win) {
    signal.validate();
    win.validate(signal.size());

    // |sgn(x[m]) - sgn(x[m-1])|; x[-1] is a zero sample, so sgn = +1
    std::vector<double> diffs(signal.size());
    int prev = 1;
    for (std::size_t m = 0; m < signal.size(); ++m) {
        const int s = sgn(signal.samples[m]);
        diffs[m] = static_cast<double>(std::abs(s - prev));
        prev = s;
    }

    CharacteristicSeries out;
    out.values = windowed_sum(diffs, win);
    const double scale = 1.0 / (2.0 * static_cast<double>(win.length));
    for (double& v : out.values) v *= scale;
    out.kind = SeriesKind::stzcr;
    out.hop = win.hop;
    out.origin_offset = 0;
    return out;
}

double zcr_normalize(double z_per_sample, double interval_tau_s, double sample_rate) {
    if (interval_tau_s <= 0.0) throw std::invalid_argument("interval must be positive");
    return interval_tau_s * sample_rate * z_per_sample;
}

NoiseStats estimate_noise(const CharacteristicSeries& series, std::size_t start,
                          std::size_t span, double alpha) {
    if (span < 2) throw std::invalid_argument("noise span must cover at least 2 samples");
    if (start > series.size() || span > series.size() - start)
        throw std::invalid_argument("noise slice out of range");

    const double* v = series.values.data() + start;
    double sum = 0.0;
    for (std::size_t i = 0; i < span; ++i) sum += v[i];
    const double mean = sum / static_cast<double>(span);

    double ss = 0.0;
    for (std::size_t i = 0; i < span; ++i) {
        const double d = v[i] - mean;
        ss += d * d;
    }

    NoiseStats stats;
    stats.mean = mean;
    stats.stddev = std::sqrt(ss / static_cast<double>(span));  // population
    stats.alpha = alpha;
    return stats;
}

std::vector<double> moving_sum_squares(std::span<const double> x, std::size_t window) {
    if (window == 0) throw std::invalid_argument("window must be positive");
    constexpr std::size_t kRefresh = 1024;

    std::vector<double> out(x.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        acc += x[n] * x[n];
        if (n >= window) acc -= x[n - window] * x[n - window];
        if (n % kRefresh == kRefresh - 1) {
            // exact re-summation caps running-difference drift
            acc = 0.0;
            const std::size_t lo = (n + 1 >= window) ? n + 1 - window : 0;
            for (std::size_t m = lo; m <= n; ++m) acc += x[m] * x[m];
        }
        out[n] = acc;
    }
    return out;
}

}  // namespace aedet
