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

#include <catch2/catch_amalgamated.hpp>

#include "snt/report.hpp"
#include "snt/report_io.hpp"

using namespace snt;

TEST_CASE("property ids resolve case-insensitively and round-trip") {
  REQUIRE(property_id_from_string("np") == PropertyId::NP);
  REQUIRE(property_id_from_string("NP") == PropertyId::NP);
  REQUIRE(property_id_from_string("ndual_t_s") == PropertyId::NDUAL_T_S);
  REQUIRE(property_id_from_string("prop33iii_a") == PropertyId::PROP33iii_a);
  REQUIRE_FALSE(property_id_from_string("frob").has_value());
  REQUIRE_FALSE(property_id_from_string("").has_value());
  for (int k = 0; k <= static_cast<int>(PropertyId::T_EQ_MIN); ++k) {
    const auto id = static_cast<PropertyId>(k);
    REQUIRE(property_id_from_string(to_string(id)) == id);
  }
}

TEST_CASE("numbers render with 12 significant digits") {
  REQUIRE(format_sig12(0.8) == "0.8");
  REQUIRE(format_sig12(0.0) == "0");
  REQUIRE(format_sig12(1.0 / 3.0) == "0.333333333333");
  REQUIRE(format_sig12(1e-6) == "1e-06");
  REQUIRE(format_sig4(0.333333333) == "0.3333");
  REQUIRE(format_sig4(5.55e-17) == "5.55e-17");
}

TEST_CASE("JSON report shape") {
  PropertyReport r;
  r.id = PropertyId::ROP;
  r.verdict = Verdict::falsified;
  r.witness = Witness{{0.9, 0.5}, 0.4};
  r.samples_checked = 10403;
  r.role = ReportRole::property;
  r.note = "quote \" and backslash \\";
  REQUIRE(to_json(r) ==
          "{\"property_id\":\"ROP\",\"verdict\":\"falsified\","
          "\"witness\":[0.9,0.5],\"residual\":0.4,\"samples_checked\":10403,"
          "\"role\":\"property\",\"note\":\"quote \\\" and backslash \\\\\"}");

  PropertyReport ok;
  ok.id = PropertyId::EP;
  ok.samples_checked = 9517;
  REQUIRE(to_json(ok) ==
          "{\"property_id\":\"EP\",\"verdict\":\"no_counterexample\","
          "\"witness\":null,\"residual\":0,\"samples_checked\":9517,"
          "\"role\":\"property\",\"note\":\"\"}");

  const PropertyReport reports[] = {ok, ok};
  const std::string arr = to_json(reports);
  REQUIRE(arr.front() == '[');
  REQUIRE(arr.back() == ']');
}

TEST_CASE("text table is aligned") {
  PropertyReport r;
  r.id = PropertyId::LC;
  r.verdict = Verdict::falsified;
  r.witness = Witness{{0.5}, 0.5};
  r.samples_checked = 357;
  const PropertyReport reports[] = {r};
  const std::string table = to_text_table(reports);
  REQUIRE(table.find("PROPERTY") != std::string::npos);
  REQUIRE(table.find("LC") != std::string::npos);
  REQUIRE(table.find("(0.5)") != std::string::npos);
  REQUIRE(table.find("falsified") != std::string::npos);
}
