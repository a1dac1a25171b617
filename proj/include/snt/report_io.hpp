/*
 * Copyright 2026 The snt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "snt/report.hpp"

namespace snt {

/// 12 significant digits, the CSV/JSON number contract.
inline std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// 4 significant digits for human-facing tables.
inline std::string format_sig4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// {property_id, verdict, witness, residual, samples_checked, role, note};
/// witness is a coordinate array or null, residual is 0 when there is no
/// witness.
inline std::string to_json(const PropertyReport& r) {
  std::string out = "{\"property_id\":\"";
  out += to_string(r.id);
  out += "\",\"verdict\":\"";
  out += to_string(r.verdict);
  out += "\",\"witness\":";
  if (r.witness) {
    out += "[";
    for (std::size_t k = 0; k < r.witness->point.size(); ++k) {
      if (k > 0) out += ",";
      out += format_sig12(r.witness->point[k]);
    }
    out += "]";
  } else {
    out += "null";
  }
  out += ",\"residual\":";
  out += format_sig12(r.witness ? r.witness->residual : 0.0);
  out += ",\"samples_checked\":";
  out += std::to_string(r.samples_checked);
  out += ",\"role\":\"";
  out += to_string(r.role);
  out += "\",\"note\":\"";
  out += detail::json_escape(r.note);
  out += "\"}";
  return out;
}

inline std::string to_json(std::span<const PropertyReport> reports) {
  std::string out = "[";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k > 0) out += ",";
    out += "\n  ";
    out += to_json(reports[k]);
  }
  out += "\n]";
  return out;
}

/// Aligned text table; numbers rounded to 4 digits.
inline std::string to_text_table(std::span<const PropertyReport> reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"PROPERTY", "ROLE", "VERDICT", "WITNESS", "RESIDUAL", "SAMPLES", "NOTE"});
  for (const auto& r : reports) {
    std::string witness = "-";
    std::string residual = "-";
    if (r.witness) {
      witness = "(";
      for (std::size_t k = 0; k < r.witness->point.size(); ++k) {
        if (k > 0) witness += ", ";
        witness += format_sig4(r.witness->point[k]);
      }
      witness += ")";
      residual = format_sig4(r.witness->residual);
    }
    rows.push_back({to_string(r.id), to_string(r.role), to_string(r.verdict),
                    witness, residual, std::to_string(r.samples_checked), r.note});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) {
        out.append(width[c] - row[c].size() + 2, ' ');
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace snt
