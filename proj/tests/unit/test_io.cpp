/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ccsched/io.hpp"
#include "ccsched/verify.hpp"

using namespace ccsched;

namespace {

const char *kThreeProfiles = R"({
  "P": 3, "tbar": 1, "alpha": 6, "L": 6, "N": 12,
  "eta": [5, 4, 3],
  "delivery": {"eta_hat": 4, "Q": 3, "beta": 3, "strategy": "A"}
})";

ParseError parse_error(const std::string &text) {
    try {
        parse_scenario_text(text);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected a parse error for " << text);
    return ParseError("");
}

}  // namespace

TEST_CASE("scenario with an eta vector") {
    const auto s = parse_scenario_text(kThreeProfiles);
    CHECK(s.config.P == 3);
    CHECK(s.config.K() == 12);
    CHECK(s.config.association.at(5) == 1);
    CHECK(s.config.association.at(6) == 2);
    CHECK_FALSE(s.explicit_association);
    REQUIRE(s.delivery.has_value());
    CHECK(*s.delivery == DeliveryParams{4, 3, 3, Strategy::A});
    CHECK_FALSE(s.demands.has_value());
    CHECK(s.effective_demands().at(5) == 5);
}

TEST_CASE("scenario with an explicit association and demands") {
    const auto s = parse_scenario_text(R"({
      "P": 2, "tbar": 1, "alpha": 2, "L": 3, "N": 2,
      "association": {"3": 1, "8": 2, "11": 2},
      "delivery": "sweep",
      "demands": {"3": 2, "8": 1, "11": 1},
      "seed": 9, "samples": 50
    })");
    CHECK(s.explicit_association);
    CHECK(s.config.association == std::map<UserId, ProfileId>{{3, 1}, {8, 2}, {11, 2}});
    CHECK_FALSE(s.delivery.has_value());
    CHECK(s.demands->at(3) == 2);
    CHECK(*s.seed == 9);
    CHECK(*s.samples == 50);
}

TEST_CASE("scenario round trip") {
    for (const std::string text :
         {std::string(kThreeProfiles),
          std::string(R"({"P":2,"tbar":1,"alpha":2,"L":3,"N":2,"association":{"3":1,"8":2},"demands":{"3":2,"8":1},"seed":3})")}) {
        const auto first = parse_scenario_text(text);
        const auto emitted = to_json(first);
        const auto second = parse_scenario(emitted);
        CHECK(first == second);
        CHECK(to_json(second) == emitted);
    }
}

TEST_CASE("scenario parse errors") {
    parse_error("{not json");
    parse_error("[]");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1],"association":{"1":1}})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1]})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,-1,1]})");
    parse_error(R"({"P":"3","tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1]})");
    parse_error(R"({"P":3.5,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1]})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1],"extra":1})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1],"delivery":"best"})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1],"delivery":{"eta_hat":1,"Q":2,"beta":1,"strategy":"C"}})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"eta":[1,1,1],"delivery":{"eta_hat":1,"Q":2,"strategy":"A"}})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"association":{"x":1}})");
    parse_error(R"({"P":3,"tbar":1,"alpha":6,"L":6,"N":12,"association":{"0":1}})");
    CHECK(std::string(parse_error(R"({"P":3})").what()).find("tbar") != std::string::npos);
}

TEST_CASE("schedule JSON round trip") {
    const auto s = parse_scenario_text(kThreeProfiles);
    const auto schedule = build_schedule(s.config, *s.delivery, s.effective_demands());
    const auto doc = schedule_to_json(schedule);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == schedule.cc.size() + schedule.uc.size());
    CHECK(doc[0]["step"] == "cc");
    CHECK(doc[0]["id"] == nlohmann::json::array({1, 1, 1}));
    const auto &cw = doc[0]["codewords"][0];
    for (const char *key : {"recipient", "file", "profiles", "q", "nullset"}) CHECK(cw.contains(key));
    CHECK(doc.back()["step"] == "uc");

    const auto back = schedule_from_json(doc, s.config, *s.delivery);
    CHECK(back.cc.size() == schedule.cc.size());
    CHECK(back.uc.size() == schedule.uc.size());
    CHECK(back.subpackets_per_minifile == 3);
    CHECK(schedule_to_json(back) == doc);
    CHECK(verify_schedule(back, s.config, s.effective_demands()).pass);

    CHECK_THROWS_AS(schedule_from_json(nlohmann::json::object(), s.config, *s.delivery), ParseError);
    CHECK_THROWS_AS(schedule_from_json(nlohmann::json::parse(R"([{"step":"xx","id":[],"codewords":[]}])"), s.config,
                                       *s.delivery),
                    ParseError);
    CHECK_THROWS_AS(
        schedule_from_json(nlohmann::json::parse(R"([{"step":"cc","id":[1],"codewords":[{"recipient":1}]}])"),
                           s.config, *s.delivery),
        ParseError);
}

TEST_CASE("DoF report JSON") {
    DofReport r;
    r.J_M = 33;
    r.J_U = 6;
    r.T_M = 4;
    r.T_U = 6;
    r.empirical = Rational(39, 10);
    r.closed_form = Rational(39, 10);
    r.params = {4, 3, 3, Strategy::A};
    const auto text = dof_report_to_json(r, true).dump();
    CHECK(text.find("\"39/10\"") != std::string::npos);
    CHECK(text.find("3.9") != std::string::npos);
    CHECK(dof_report_to_json(r, true)["dof_decimal"] == 3.9);
}

TEST_CASE("sweep CSV") {
    SweepResult empty;
    std::ostringstream header;
    write_sweep_csv(header, empty);
    CHECK(header.str() == "eta_hat,Q,strategy,beta,K_M,K_U,T_M,T_U,dof_num,dof_den,dof_decimal,feasible\n");

    SweepResult result;
    SweepRow feasible;
    feasible.params = {5, 3, 5, Strategy::B};
    feasible.feasible = true;
    feasible.dof = Rational(12);
    feasible.K_M = 30;
    feasible.T_M = 600;
    SweepRow infeasible;
    infeasible.params = {1, 7, 1, Strategy::A};
    infeasible.K_M = 6;
    infeasible.K_U = 24;
    SweepRow fraction = feasible;
    fraction.dof = Rational(39, 10);
    result.rows = {feasible, infeasible, fraction};
    std::ostringstream out;
    write_sweep_csv(out, result);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line == "5,3,B,5,30,0,600,0,12,1,12.000000,true");
    std::getline(lines, line);
    CHECK(line == "1,7,A,1,6,24,,,,,,false");
    std::getline(lines, line);
    CHECK(line == "5,3,B,5,30,0,600,0,39,10,3.900000,true");
}

TEST_CASE("sigma CSV") {
    SigmaExperimentResult r;
    r.bins = {{0, 3, 12.0}, {3, 10, 9.25}};
    r.unicast_baseline = 7;
    r.uniform_optimum = Rational(12);
    std::ostringstream out;
    write_sigma_csv(out, r);
    CHECK(out.str() ==
          "sigma_bin,n_samples,dof_m_decimal,unicast_baseline,uniform_optimum\n"
          "0.0,3,12.000000,7,12.000000\n"
          "1.5,10,9.250000,7,12.000000\n");
}
