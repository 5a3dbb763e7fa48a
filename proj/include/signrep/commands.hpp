/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "signrep/io.hpp"

#include <optional>
#include <string>

namespace signrep::cli {

struct RunReport {
    io::Json json;
    std::string text;
    /// 0 pass, 1 a checked property fails, 2 invalid input.
    int exit_code = 0;
};

/// Each command takes the raw document text and a display name for the report.
RunReport cmd_sign(const std::string& text, const std::string& name);
RunReport cmd_specialize(const std::string& text, const std::string& name, std::optional<std::size_t> precision);
/// perm is "cycle" or "explicit:" followed by one-based images, e.g. "explicit:2,3,1".
RunReport cmd_refine(const std::string& text, const std::string& name, const std::string& perm,
                     const std::optional<std::string>& bound);
RunReport cmd_h3(const std::string& text, const std::string& name, const std::string& multiplier);

/// Report for an input that could not be read.
RunReport unreadable(const std::string& command, const std::string& name, const std::string& why);

}  // namespace signrep::cli
