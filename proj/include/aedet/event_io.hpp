#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "aedet/campaign.hpp"
#include "aedet/evaluation.hpp"
#include "aedet/stezcr.hpp"

namespace aedet {

/// One serialized detection, as written by `detect` outputs and consumed by
/// `evaluate`. Field names are part of the wire format.
struct EventRecord {
    std::string method;
    double onset_s = 0.0;
    double endpoint_s = 0.0;
    double lifespan_s = 0.0;
    std::size_t onset_idx = 0;
    std::size_t endpoint_idx = 0;
    bool truncated = false;
};

std::vector<EventRecord> to_records(const std::string& method,
                                    const std::vector<AeEvent>& events,
                                    double sample_rate);

nlohmann::json events_to_json(const std::vector<EventRecord>& records,
                              const nlohmann::json& manifest);
std::vector<EventRecord> events_from_json(const nlohmann::json& doc);

void write_events_json(const std::string& path, const std::vector<EventRecord>& records,
                       const nlohmann::json& manifest);
std::vector<EventRecord> read_events_json(const std::string& path);

/// Flat CSV projection of the same records; the manifest rides in a leading
/// "# manifest: ..." comment line.
void write_events_csv(const std::string& path, const std::vector<EventRecord>& records,
                      const nlohmann::json& manifest);

nlohmann::json report_to_json(const EvalReport& report, const nlohmann::json& manifest);
void write_report_json(const std::string& path, const EvalReport& report,
                       const nlohmann::json& manifest);
void write_report_csv(const std::string& path, const EvalReport& report,
                      const nlohmann::json& manifest);

/// Series dump as "index,value" rows.
void write_series_csv(const std::string& path, const CharacteristicSeries& series,
                      const nlohmann::json& manifest);

}  // namespace aedet
