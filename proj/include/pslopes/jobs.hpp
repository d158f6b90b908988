#pragma once

#include "pslopes/spec_io.hpp"

#include <string>
#include <vector>

namespace pslopes {

struct JobOutput {
    ojson report;
    std::string text;
    std::vector<std::vector<std::string>> csv;  // first row is the header
    int exit_code = 0;  // 0 ok or inconclusive, 1 a check ran and failed
};

// Commands: norms radius soluble slope newton irr index frobenius select selftest.
JobOutput run_job(const std::string& command, const JobSpec& job);

const std::vector<std::string>& job_commands();

}  // namespace pslopes
