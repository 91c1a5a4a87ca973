// Copyright 2026 The hilbert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HILBERT_TOOLS_CLI_HPP
#define HILBERT_TOOLS_CLI_HPP

#include "hilbert/io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hilbert::cli {

enum ExitCode { kPass = 0, kChecksFailed = 1, kUsage = 2, kIo = 3 };

struct Check {
    std::string name;
    double value = 0;
    double threshold = 0;
    bool pass = false;
    std::string comparison;  // "<", "<=", ">=", "=="
};

struct RunReport {
    std::string command;
    Json parameters = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    std::optional<std::uint64_t> seed;
    Json data = Json::object();
    std::string body;  // human-readable payload printed before the checks

    bool pass() const;
    void below(const std::string& name, double value, double threshold);
    void at_most(const std::string& name, double value, double threshold);
    void at_least(const std::string& name, double value, double threshold);
    void equal(const std::string& name, double value, double expected);
    Json to_json() const;
    std::string to_text() const;
};

/// Parses args (without the program name), runs the command and writes the
/// report to out. Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunReport* report = nullptr);

}  // namespace hilbert::cli

#endif  // HILBERT_TOOLS_CLI_HPP
