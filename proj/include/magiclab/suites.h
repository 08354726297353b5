// Copyright 2026 The Magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclab {

using Json = nlohmann::ordered_json;

/// One check result. `observed` is a number or an array of numbers.
struct CheckReport {
    std::string check;
    Json params = Json::object();
    Json observed;
    std::optional<double> bound;
    bool pass = false;
    int64_t runtime_ms = 0;

    Json to_json(bool with_runtime = true) const;
};

/// Overrides shared by every suite; unset fields keep per-check defaults.
struct SuiteParams {
    uint64_t seed = 7;
    std::optional<size_t> n;
    std::optional<size_t> trials;
    std::optional<double> tol;
};

/// Unknown suite names.
class UnknownSuite : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> &suite_names();

/// Runs every check of `suite` (one of suite_names(), or "all") in a fixed
/// order. Throws UnknownSuite, or std::invalid_argument for bad params.
std::vector<CheckReport> run_checks(const std::string &suite, const SuiteParams &params);

/// Serializes reports as one JSON array, or one object per line.
std::string reports_to_string(const std::vector<CheckReport> &reports, bool jsonl, bool with_runtime = true);

/// Writes `text` to `path` through a temporary file and a rename. An empty
/// path writes to stdout.
void write_output(const std::string &path, const std::string &text);

/// 0 if every report passes, 1 otherwise.
int exit_code(const std::vector<CheckReport> &reports);

/// run_checks plus output: 0 all pass, 1 some check failed, 2 unknown suite
/// or invalid params.
int run_suite(const std::string &suite, const SuiteParams &params, const std::string &out_path, bool jsonl = false);

}  // namespace magiclab
