#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prymlab {

class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string &what) : std::runtime_error("schema: " + what) {}
};

class StageError : public std::runtime_error {
public:
    std::string stage;
    StageError(const std::string &stage_, const std::string &cause)
        : std::runtime_error("stage " + stage_ + ": " + cause), stage(stage_) {}
};

struct JobOptions {
    size_t cap = 5000;
    size_t budget = 2000000;
    std::uint64_t seed = 0;
};

// Runs a JSON job document and returns the canonical JSON report text.
std::string run_job(const std::string &job_text, const JobOptions &opts);

// Renders a report (canonical JSON text) as a human-readable summary.
std::string report_to_text(const std::string &report_json);

} // namespace prymlab
