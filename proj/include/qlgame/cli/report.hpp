// Copyright 2026 The qlgame Authors.
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

// JSON fragments of solve reports. Profiles are arrays of element labels,
// values are rational strings, players are referred to by name.

#ifndef QLGAME_CLI_REPORT_HPP_
#define QLGAME_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "qlgame/cli/spec_file.hpp"
#include "qlgame/game.hpp"

namespace qlgame::cli {

using nlohmann::json;

json profile_json(const Game& game, const StrategyProfile& x);

json nash_json(const ResolvedGame& g, const NashCertificate& cert);

json efficient_nash_json(const ResolvedGame& g, const EfficientNashCheck& check);

/// Axiom report of every strategy space plus the quasi-Leontief status of
/// every component (global) or a summary of the section check (individual).
json validation_json(const ResolvedGame& g);

/// Irrelevance sets and normalized forms of the given Nash points, the
/// maximal Nash point when defined, flagged breakpoints and notes.
json diagnostics_json(const ResolvedGame& g,
                      const std::vector<StrategyProfile>& nash);

/// Profiles listed under "nash" and "efficient_nash" are re-checked against
/// fresh certificates. Returns one message per mismatch.
std::vector<std::string> verify_report(const Game& game, const json& report);

/// Short human-readable rendering of a report document.
std::string render_text(const json& report);

}  // namespace qlgame::cli

#endif  // QLGAME_CLI_REPORT_HPP_
