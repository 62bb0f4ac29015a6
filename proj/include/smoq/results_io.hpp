// Copyright 2026 The smoq Authors.
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

#pragma once

#include <string>
#include <vector>

#include "smoq/benchmark.hpp"

namespace smoq {

/// File name of a CDF table inside the output directory: cdf_<checkpoint>.csv
/// for the task's primary metric, cdf_<metric>_<checkpoint>.csv otherwise.
std::string cdf_file_name(const CdfTable &table, TaskKind task);

/// Full configuration, derived seeds and output file list as JSON.
std::string manifest_json(const BenchmarkSpec &spec, const BenchmarkResult &result);

/// Writes runs/<k>.csv, one CDF file per table and manifest.json under
/// `out_dir` (created if missing). Returns the written paths, manifest last.
std::vector<std::string> emit_results(const BenchmarkSpec &spec, const BenchmarkResult &result,
                                      const std::string &out_dir);

/// Reads a CDF file back into a table with the given metric name.
CdfTable read_cdf_csv(const std::string &path, const std::string &metric);

} // namespace smoq
