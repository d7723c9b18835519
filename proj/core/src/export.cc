// Copyright 2026 The qcat Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcat/experiments.h"

namespace qcat {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_csv(const RunResult& result) {
  std::ostringstream csv;
  csv << "t,observable,mean,stderr\n";
  for (const auto& [name, stats] : result.series) {
    for (std::size_t t = 0; t < stats.mean.size(); ++t) {
      csv << t << ',' << name << ',' << format_double(stats.mean[t]) << ','
          << format_double(stats.stderr_of_mean[t]) << '\n';
    }
  }
  for (const auto& [name, value] : result.scalars) {
    csv << result.config.t_max << ',' << name << ',' << format_double(value)
        << ",0\n";
  }
  return csv.str();
}

std::string render_plot_script(const std::string& csv_name) {
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "\"\"\"Plots the mean transfer fidelity from " << csv_name
     << " against the\nbest classical (measure-and-prepare) fidelity of "
        "2/3.\"\"\"\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "ts, means, errs = [], [], []\n"
     << "with open(\"" << csv_name << "\") as f:\n"
     << "    for row in csv.DictReader(f):\n"
     << "        if row[\"observable\"] == \"fidelity\":\n"
     << "            ts.append(int(row[\"t\"]))\n"
     << "            means.append(float(row[\"mean\"]))\n"
     << "            errs.append(float(row[\"stderr\"]))\n\n"
     << "fig, ax = plt.subplots()\n"
     << "ax.errorbar(ts, means, yerr=errs, lw=1.0, elinewidth=0.5)\n"
     << "ax.axhline(2.0 / 3.0, color=\"k\", ls=\"--\", lw=0.8,\n"
     << "           label=\"classical bound 2/3\")\n"
     << "ax.set_xlabel(\"t\")\n"
     << "ax.set_ylabel(\"mean fidelity\")\n"
     << "ax.set_ylim(0.0, 1.05)\n"
     << "ax.legend()\n"
     << "fig.savefig(\"" << csv_name << ".png\", dpi=160)\n";
  return py.str();
}

json report_to_json(const CausalReport& report) {
  json lines = json::array();
  for (const ConstraintLine& line : report.lines) {
    lines.push_back({{"name", line.name},
                     {"residual", line.residual},
                     {"pass", line.pass}});
  }
  return {{"lines", lines},
          {"class_constraints_ok", report.class_constraints_ok},
          {"strictly_causal", report.strictly_causal}};
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("export: cannot open " + path.string());
  }
  out << body;
  if (!out) {
    throw std::runtime_error("export: write failed for " + path.string());
  }
}

}  // namespace

void export_result(const RunResult& result,
                   const std::filesystem::path& out_dir, ExportFormat format) {
  std::filesystem::create_directories(out_dir);
  const std::string csv_name = result.config.name + ".csv";
  const std::string csv = render_csv(result);
  write_file(out_dir / csv_name, csv);

  if (format != ExportFormat::structured_metadata) return;

  json meta;
  meta["schema_version"] = kConfigSchemaVersion;
  meta["code_version"] = kCodeVersion;
  meta["config"] = json::parse(config_to_json(result.config));
  meta["seed"] = result.config.seed;
  meta["constraint_report"] = report_to_json(result.constraint_report);
  meta["aborted_trials"] = result.aborted_trials;
  meta["abort_messages"] = result.abort_messages;
  meta["wall_seconds"] = result.wall_seconds;
  meta["csv_file"] = csv_name;
  meta["csv_checksum_fnv1a64"] = fnv1a_hex(csv);
  write_file(out_dir / (result.config.name + ".meta.json"), meta.dump(2));

  if (result.series.count("fidelity") > 0) {
    write_file(out_dir / (result.config.name + "_plot.py"),
               render_plot_script(csv_name));
  }
}

}  // namespace qcat
