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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magiclab {

/// Named scalar diagnostics from one check, together with the headline
/// observed value and the bound it was compared against.
struct WitnessReport {
    std::string name;
    std::vector<std::pair<std::string, double>> values;
    double observed = 0;
    std::optional<double> bound;
    bool pass = false;
    std::string note;

    void set(std::string_view key, double value) {
        for (auto &[k, v] : values) {
            if (k == key) {
                v = value;
                return;
            }
        }
        values.emplace_back(std::string(key), value);
    }
    /// Throws std::out_of_range for unknown keys.
    double get(std::string_view key) const {
        for (const auto &[k, v] : values) {
            if (k == key) {
                return v;
            }
        }
        throw std::out_of_range("WitnessReport: no value named " + std::string(key));
    }
};

}  // namespace magiclab
