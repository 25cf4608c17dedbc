#pragma once

#include <optional>
#include <string>

#include "aedet/evaluation.hpp"
#include "aedet/signal.hpp"

namespace aedet {

/// Waveform file formats:
///  - wav16: 16-bit PCM mono WAV, full scale mapped to +/-1.0 V
///  - csv:   headerless one-column amplitudes + "<path>.rate" sidecar
///  - f32:   raw little-endian 32-bit floats + "<path>.rate" sidecar
enum class SignalFormat { wav16, csv, f32 };

SignalFormat signal_format_from_name(const std::string& name);
const char* signal_format_name(SignalFormat fmt);

/// Guess the format from the file extension (.wav/.csv/.f32).
std::optional<SignalFormat> signal_format_from_path(const std::string& path);

/// Load a waveform. rate_override replaces the sidecar for csv/f32 (wav16
/// always uses its header). Throws std::runtime_error on I/O or parse errors.
SampledSignal load_signal(const std::string& path, SignalFormat fmt,
                          std::optional<double> rate_override = std::nullopt);

void save_signal(const std::string& path, const SampledSignal& signal, SignalFormat fmt);

/// Ground-truth sidecar: CSV rows of onset_seconds,endpoint_seconds.
/// Lines starting with '#' are comments.
GroundTruth load_truth_csv(const std::string& path);
void save_truth_csv(const std::string& path, const GroundTruth& truth,
                    const std::string& comment = "");

}  // namespace aedet
