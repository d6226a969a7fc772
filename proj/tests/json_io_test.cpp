#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "choqlab/errors.hpp"
#include "choqlab/json_io.hpp"

using namespace choqlab;

TEST_CASE("set functions round-trip through json") {
  const SetFunction phi = make_set_function(2, {0, 0.3, 0.6, 1});
  const Json j = to_json(phi);
  CHECK(j["n"] == 2);
  CHECK(j["values"].size() == 4);
  const SetFunction back = set_function_from_json(j);
  CHECK(back.n() == 2);
  CHECK(back.values() == phi.values());

  const SetFunction parsed =
      set_function_from_json(parse_json_text(R"({"n":1,"values":[0,1]})", "inline"));
  CHECK(parsed.values() == std::vector<double>{0, 1});
}

TEST_CASE("malformed set functions are rejected with one error type") {
  const auto bad = [](const char* text) {
    CHECK_THROWS_AS(set_function_from_json(parse_json_text(text, "t")), ValueError);
  };
  bad(R"(
    {"values": [0, 1]}
  )");
  bad(R"({"n": "two", "values": [0, 1, 2, 3]})");
  bad(R"({"n": 1, "values": [0, "x"]})");
  bad(R"({"n": 1, "values": [0, null]})");
  bad(R"([0, 1])");
  CHECK_THROWS_AS(set_function_from_json(parse_json_text(R"({"n": 2, "values": [0, 1]})", "t")),
                  DimensionError);
  CHECK_THROWS_AS(set_function_from_json(parse_json_text(R"({"n": 0, "values": []})", "t")),
                  DimensionError);
  CHECK_THROWS_AS(parse_json_text("{not json", "broken.json"), ValueError);
  try {
    parse_json_text("{not json", "broken.json");
  } catch (const ValueError& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
}

TEST_CASE("domains round-trip through json and the compact string form") {
  const DomainSpec kinds[] = {DomainSpec::full_line(), DomainSpec::nonneg(),
                              DomainSpec::nonpos(), DomainSpec::centered(2.5),
                              DomainSpec::box(-1, 3)};
  for (const DomainSpec& d : kinds) {
    const DomainSpec back = domain_from_json(to_json(d));
    CHECK(back.kind() == d.kind());
    if (std::isfinite(d.lo())) CHECK(back.lo() == d.lo());
    if (std::isfinite(d.hi())) CHECK(back.hi() == d.hi());
  }

  CHECK(domain_from_string("full_line").kind() == DomainSpec::Kind::full_line);
  CHECK(domain_from_string("full").kind() == DomainSpec::Kind::full_line);
  CHECK(domain_from_string("nonneg").kind() == DomainSpec::Kind::nonneg);
  CHECK(domain_from_string("nonpos").kind() == DomainSpec::Kind::nonpos);
  const DomainSpec cen = domain_from_string("centered:2.5");
  CHECK(cen.kind() == DomainSpec::Kind::centered);
  CHECK(cen.hi() == 2.5);
  const DomainSpec box = domain_from_string("box:-1:3");
  CHECK(box.kind() == DomainSpec::Kind::box);
  CHECK(box.lo() == -1.0);
  CHECK(box.hi() == 3.0);

  CHECK_THROWS_AS(domain_from_string("circle"), ValueError);
  CHECK_THROWS_AS(domain_from_string("centered:"), ValueError);
  CHECK_THROWS_AS(domain_from_string("centered:abc"), ValueError);
  CHECK_THROWS_AS(domain_from_string("box:1"), ValueError);
  CHECK_THROWS_AS(domain_from_string("box:1:2"), ValueError);
  CHECK_THROWS_AS(domain_from_string(""), ValueError);
}

TEST_CASE("extensions round-trip through json") {
  const Json lov = parse_json_text(
      R"({"type": "lovasz", "phi": {"n": 2, "values": [0, 0.3, 0.6, 1]}})", "t");
  const LoadedExtension a = extension_from_json(lov);
  CHECK(a.type == "lovasz");
  CHECK(a.n == 2);
  REQUIRE(a.lovasz.has_value());
  CHECK(a.fn(Vec{3, 5}) == doctest::Approx(4.2));
  const Json lov2 = to_json(*a.lovasz);
  CHECK(lov2["type"] == "lovasz");
  CHECK(extension_from_json(lov2).fn(Vec{3, 5}) == a.fn(Vec{3, 5}));

  const Json sym = parse_json_text(
      R"({"type": "symmetric", "phi": {"n": 2, "values": [0, 0.3, 0.6, 1]}})", "t");
  const LoadedExtension b = extension_from_json(sym);
  REQUIRE(b.symmetric.has_value());
  CHECK(b.fn(Vec{-3, 5}) == doctest::Approx(2.1));
  CHECK(to_json(*b.symmetric)["type"] == "symmetric");

  const Json med = parse_json_text(
      R"({"type": "median",
          "phi": {"n": 2, "values": [0, 0.3, 0.6, 1]},
          "phi_neg": {"n": 2, "values": [0, 0.5, 0.5, 1]}})",
      "t");
  const LoadedExtension c = extension_from_json(med);
  REQUIRE(c.median.has_value());
  CHECK(c.fn(Vec{-1, 2}) == doctest::Approx(0.7));
  const Json med2 = to_json(*c.median);
  CHECK(med2["type"] == "median");
  CHECK(med2.contains("phi_neg"));
  CHECK(extension_from_json(med2).fn(Vec{-1, 2}) == c.fn(Vec{-1, 2}));
}

TEST_CASE("extension shapes are validated") {
  const auto bad = [](const char* text) {
    CHECK_THROWS_AS(extension_from_json(parse_json_text(text, "t")), ValueError);
  };
  bad(R"({"phi": {"n": 1, "values": [0, 1]}})");
  bad(R"({"type": "unknown", "phi": {"n": 1, "values": [0, 1]}})");
  bad(R"({"type": "lovasz"})");
  // phi_neg only belongs to the median type.
  bad(R"({"type": "lovasz", "phi": {"n": 1, "values": [0, 1]},
          "phi_neg": {"n": 1, "values": [0, 1]}})");
  bad(R"({"type": "median", "phi": {"n": 1, "values": [0, 1]}})");
  // Median tables must vanish on the empty set; the ctor error passes through.
  CHECK_THROWS_AS(
      extension_from_json(parse_json_text(
          R"({"type": "median", "phi": {"n": 1, "values": [0.5, 1]},
              "phi_neg": {"n": 1, "values": [0, 1]}})",
          "t")),
      ValueError);
}

TEST_CASE("vector payloads accept four shapes") {
  const auto parse = [](const char* text) {
    return vectors_from_json(parse_json_text(text, "t"));
  };
  CHECK(parse(R"([1, 2])") == std::vector<Vec>{Vec{1, 2}});
  CHECK(parse(R"([[1, 2], [3, 4]])") == std::vector<Vec>{Vec{1, 2}, Vec{3, 4}});
  CHECK(parse(R"({"vector": [5]})") == std::vector<Vec>{Vec{5}});
  CHECK(parse(R"({"vectors": [[5], [6]]})") == std::vector<Vec>{Vec{5}, Vec{6}});

  CHECK_THROWS_AS(parse(R"([])"), ValueError);
  CHECK_THROWS_AS(parse(R"([[]])"), ValueError);
  CHECK_THROWS_AS(parse(R"({"vectors": []})"), ValueError);
  CHECK_THROWS_AS(parse(R"([1, "x"])"), ValueError);
  CHECK_THROWS_AS(parse(R"({"points": [[1]]})"), ValueError);
  CHECK_THROWS_AS(parse(R"([[1], 2])"), ValueError);
}

TEST_CASE("hex rendering is lossless") {
  const double samples[] = {0.0,  -0.0, 1.0,    0.1,      -3.5,
                            42.0, 1e-300, -1e300, 4.2,      0.3,
                            5.6e-17, 1.0 / 3.0, 2.2250738585072014e-308};
  for (double v : samples) {
    const std::string hex = hex_double(v);
    CHECK(std::strtod(hex.c_str(), nullptr) == v);
  }
}

TEST_CASE("witness and verdict payloads carry both renderings") {
  Witness w;
  w.x = {1.5, -2.0};
  w.x2 = {0.5, 0.5};
  w.cut = 0.25;
  w.lhs = 3.0;
  w.rhs = 2.5;
  w.gap = 0.5;
  w.note = "demo";
  const Json jw = to_json(w);
  CHECK(jw["x"] == Json::array({1.5, -2.0}));
  CHECK(jw["x2"] == Json::array({0.5, 0.5}));
  CHECK(jw["cut"] == 0.25);
  CHECK(jw["lhs"] == 3.0);
  CHECK(jw["rhs"] == 2.5);
  CHECK(jw["gap"] == 0.5);
  CHECK(jw["note"] == "demo");
  REQUIRE(jw.contains("x_hex"));
  REQUIRE(jw["x_hex"].is_array());
  CHECK(std::strtod(jw["x_hex"][0].get<std::string>().c_str(), nullptr) == 1.5);
  CHECK(std::strtod(jw["cut_hex"].get<std::string>().c_str(), nullptr) == 0.25);
  CHECK(std::strtod(jw["lhs_hex"].get<std::string>().c_str(), nullptr) == 3.0);

  Verdict v;
  v.passed = false;
  v.trials = 17;
  v.seed = 99;
  v.witness = w;
  const Json jv = to_json(v);
  CHECK(jv["passed"] == false);
  CHECK(jv["trials"] == 17);
  CHECK(jv["seed"] == 99);
  CHECK(jv["witness"]["note"] == "demo");

  Verdict ok;
  ok.passed = true;
  ok.trials = 100;
  const Json jok = to_json(ok);
  CHECK(jok["passed"] == true);
  CHECK_FALSE(jok.contains("witness"));

  // A witness without a second vector or cut drops those keys.
  Witness single;
  single.x = {1.0};
  single.lhs = 1.0;
  single.rhs = 0.0;
  single.gap = 1.0;
  const Json js = to_json(single);
  CHECK_FALSE(js.contains("x2"));
  CHECK_FALSE(js.contains("cut"));
}
