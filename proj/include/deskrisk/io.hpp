// Copyright 2026 The deskrisk Authors
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

// File formats. Every document carries "format": 1 and uses 1-based paper
// and author indices.
//
// Instance:   {"format":1,"n":N,"m":M,"papers":[[a,...],...],"p":[...],
//              "b":int|null,"lambda":float|null}
// Assignment: {"format":1,"nominee":[a,...]}
// Report:     SolveReport fields, see report_to_json().
//
// Doubles are written in shortest round-trip form, so save/load is
// lossless.

#ifndef DESKRISK_IO_HPP_
#define DESKRISK_IO_HPP_

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "deskrisk/flow.hpp"
#include "deskrisk/instance.hpp"
#include "deskrisk/lp.hpp"

namespace deskrisk {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json instance_to_json(const Instance& instance);
// Throws FormatError on structural problems (missing keys, wrong types,
// unsupported format). Does not run validate().
Instance instance_from_json(const Json& doc);

Json assignment_to_json(const Assignment& assignment);
Assignment assignment_from_json(const Json& doc);

Json report_to_json(const Instance& instance, const SolveReport& report);
SolveReport report_from_json(const Json& doc);

Json network_to_json(const FlowNetwork& network);
Json lp_to_json(const LinearProgram& lp);

std::string dump(const Json& doc);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);
Json read_json(const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);

// Imports `paper_id,author_id` rows (1-based; optional header line) plus a
// sidecar of `author_id,p` rows. n is the largest paper id, m the number of
// sidecar rows (author ids must be 1..m). Duplicate pairs are rejected.
Instance import_csv(std::istream& pairs, std::istream& probabilities);

}  // namespace deskrisk

#endif  // DESKRISK_IO_HPP_
