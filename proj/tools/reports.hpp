// Copyright 2026 The Authors.
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


#ifndef TROPLAB_TOOLS_REPORTS_HPP_
#define TROPLAB_TOOLS_REPORTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"

namespace troplab::cli {

struct Format {
  std::optional<int> decimal;
  std::string operator()(const Rational& r) const;
};

struct ReportParams {
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  std::string family;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  std::size_t produced_limit = 0;
  Execution exec = Execution::Parallel;
};

class Table {
 public:
  explicit Table(std::ostream& out, const Format& fmt) : out_(out), fmt_(fmt) {}
  void check(const std::string& name, bool ok, const std::string& value);
  void info(const std::string& name, const std::string& value);
  const Format& fmt() const { return fmt_; }
  bool all_passed() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }

 private:
  std::ostream& out_;
  const Format& fmt_;
  std::size_t failures_ = 0;
};

// Each suite prints a table and returns false if any row failed.
bool report_hierarchy(const ReportParams& p, Table& t);
bool report_sidon(const ReportParams& p, Table& t);
bool report_greedy(const ReportParams& p, Table& t);
bool report_decomposition(const ReportParams& p, Table& t);
bool report_counting(const ReportParams& p, Table& t);

}  // namespace troplab::cli

#endif  // TROPLAB_TOOLS_REPORTS_HPP_
