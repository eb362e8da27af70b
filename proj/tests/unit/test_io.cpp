#include <doctest.h>

#include <filesystem>
#include <string>

#include "../support/fixtures.hpp"
#include "funobs/error.hpp"
#include "funobs/io.hpp"

using namespace funobs;

#ifndef FUNOBS_SYSTEMS_DIR
#error "FUNOBS_SYSTEMS_DIR must point at the bundled systems"
#endif

namespace {

const std::string systems_dir = FUNOBS_SYSTEMS_DIR;

bool same_system(const SystemSextuple& a, const SystemSextuple& b) {
  return a.A == b.A && a.B == b.B && a.C == b.C && a.D == b.D && a.E == b.E && a.F == b.F;
}

std::string error_of(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("bundled systems round-trip and match the fixtures") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(systems_dir)) {
      if (entry.path().extension() != ".json") continue;
      CAPTURE(entry.path().string());
      const SystemFile f = load_system(entry.path().string());
      const SystemFile g = parse_system(serialize_system(f));
      CHECK(same_system(f.system, g.system));
      CHECK(f.name == g.name);
      CHECK(f.expected == g.expected);
      CHECK_FALSE(f.expected.empty());
      ++count;
    }
    CHECK(count >= 5);
    CHECK(same_system(load_system(systems_dir + "/example1.json").system, fixture::example1()));
    CHECK(same_system(load_system(systems_dir + "/example2.json").system, fixture::example2()));
    CHECK(same_system(load_system(systems_dir + "/diagonal_full_state.json").system, fixture::diagonal_full_state()));
    CHECK(same_system(load_system(systems_dir + "/proper_unstable_witness.json").system, fixture::proper_unstable_witness()));
    CHECK(same_system(load_system(systems_dir + "/triple_chain.json").system, fixture::triple_chain()));
  }
  TEST_CASE("decimals are exact") {
    const SystemFile f = parse_system(R"j({"A": [[0.1]], "C": [[1e-3]], "E": [["2/6"]]})j");
    CHECK(f.system.A(0, 0) == Rational(1, 10));
    CHECK(f.system.C(0, 0) == Rational(1, 1000));
    CHECK(f.system.E(0, 0) == Rational(1, 3));
    CHECK(f.system.m() == 0);
    CHECK(f.system.D.rows() == 1);
  }
  TEST_CASE("errors name the field") {
    CHECK(error_of(R"j({"A": [[1, 2]]})j").find("A") != std::string::npos);
    CHECK(error_of(R"j({"A": [[1]], "B": [[1], [2]]})j").find("B") != std::string::npos);
    CHECK(error_of(R"j({"A": [[1]], "C": [["x"]]})j").find("C[0][0]") != std::string::npos);
    CHECK(error_of(R"j({"A": [[1]], "bogus": 1})j").find("bogus") != std::string::npos);
    CHECK_FALSE(error_of(R"j({"A": [[1]],)j").empty());
    CHECK_FALSE(error_of("[]").empty());
    CHECK_THROWS_AS(load_system(systems_dir + "/does_not_exist.json"), Error);
  }
  TEST_CASE("report json round-trips") {
    Report r;
    r.system_name = "example2";
    const auto sys = fixture::example2();
    for (Property p : all_properties()) r.verdicts.push_back(decide(p, sys));
    r.witness = solve_over_field(fixture::proper_unstable_witness());
    r.timing.emplace_back("strong", 0.25);
    const Json j = report_to_json(r);
    CHECK(j["schema_version"] == kReportSchema);
    const Report back = report_from_json(Json::parse(j.dump()));
    CHECK(report_to_json(back) == j);
    REQUIRE(back.verdicts.size() == r.verdicts.size());
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
      CHECK(back.verdicts[i].holds == r.verdicts[i].holds);
      CHECK(back.verdicts[i].certificate.polynomials == r.verdicts[i].certificate.polynomials);
    }
    REQUIRE(back.witness.has_value());
    CHECK(back.witness->MN == r.witness->MN);
  }
  TEST_CASE("report text") {
    Report r;
    const auto sys = fixture::example2();
    r.verdicts.push_back(strongly_functional_detectable(sys));
    r.verdicts.push_back(strong_star_functional_detectable(sys));
    const std::string text = report_to_text(r);
    CHECK(text.find("strong: yes") != std::string::npos);
    CHECK(text.find("strong-star: no") != std::string::npos);
    CHECK(text.find("properness_inclusion") != std::string::npos);
  }
  TEST_CASE("observers") {
    StateSpaceRealization r = parse_observer(R"j({"N": "s^2/(0.1s^2 + 1.1s + 1)"})j");
    CHECK(r.order() == 2);
    CHECK(r.R(0, 0) == doctest::Approx(10));
    r = parse_observer(R"j({"N": [[{"num": [1], "den": [1, 1]}, 0]]})j");
    CHECK(r.order() == 1);
    CHECK(r.R.cols() == 2);
    r = parse_observer(R"j({"G": [[-1]], "H": [[1]], "Q": [[2]], "R": [[0]]})j");
    CHECK(r.Q(0, 0) == 2);
    for (const char* bad : {R"j({"N": "s"})j", R"j({"N": "1/(s-1)"})j", R"j({"G": [[-1]]})j", R"j({"N": [[{"num": [1]}]]})j"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_observer(bad), Error);
    }
  }
  TEST_CASE("scenarios") {
    ScenarioFile f = parse_scenario(R"j({"x0": [1, -2], "horizon": 5, "step": 0.01})j");
    CHECK(f.horizon_given);
    CHECK(f.scenario.x0(1) == -2);
    f = parse_scenario(R"j({"input": {"kind": "sinusoid", "terms": [{"amplitude": [1], "omega": 2}]}, "threshold": 1e-3})j");
    CHECK_FALSE(f.horizon_given);
    CHECK(f.threshold == 1e-3);
    CHECK(input_kind(f.scenario.input) == "sinusoid");
    f = parse_scenario(R"j({"input": {"kind": "filtered", "A": [[-1]], "B": [[1]], "C": [[1]], "D": [[0]],
                                     "w0": [0], "source": {"kind": "expression", "components": ["sin(t)"]}}})j");
    CHECK(input_state_dim(f.scenario.input) == 1);
    for (const char* bad : {R"j({"step": -1})j", R"j({"input": {"kind": "warp"}})j", R"j({"x0": "a"})j",
                            R"j({"input": {"kind": "expression", "components": ["sin("]}})j"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_scenario(bad), Error);
    }
  }
}
