#include "choqlab/json_io.hpp"

#include <cstdio>

#include "choqlab/errors.hpp"

namespace choqlab {

namespace {

double number_at(const Json& j, const char* context) {
  if (!j.is_number()) throw ValueError(std::string(context) + " must be a number");
  return j.get<double>();
}

std::vector<double> number_array(const Json& j, const char* context) {
  if (!j.is_array()) throw ValueError(std::string(context) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& item : j) out.push_back(number_at(item, context));
  return out;
}

Json hex_array(const std::vector<double>& xs) {
  Json arr = Json::array();
  for (double v : xs) arr.push_back(hex_double(v));
  return arr;
}

}  // namespace

std::string hex_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

Json to_json(const SetFunction& phi) {
  return Json{{"n", phi.n()}, {"values", phi.values()}};
}

SetFunction set_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) {
    throw ValueError("set function must be an object with \"n\" and \"values\"");
  }
  if (!j.at("n").is_number_integer()) throw ValueError("set function \"n\" must be an integer");
  const int n = j.at("n").get<int>();
  return make_set_function(n, number_array(j.at("values"), "set function \"values\""));
}

Json to_json(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainSpec::Kind::full_line: return Json{{"kind", "full_line"}};
    case DomainSpec::Kind::nonneg: return Json{{"kind", "nonneg"}};
    case DomainSpec::Kind::nonpos: return Json{{"kind", "nonpos"}};
    case DomainSpec::Kind::centered: return Json{{"kind", "centered"}, {"a", d.hi()}};
    case DomainSpec::Kind::box: return Json{{"kind", "box"}, {"lo", d.lo()}, {"hi", d.hi()}};
  }
  throw Error("unreachable domain kind");
}

DomainSpec domain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ValueError("domain must be an object with a \"kind\" string");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "full_line" || kind == "full") return DomainSpec::full_line();
  if (kind == "nonneg") return DomainSpec::nonneg();
  if (kind == "nonpos") return DomainSpec::nonpos();
  if (kind == "centered") {
    if (!j.contains("a")) throw ValueError("centered domain needs \"a\"");
    return DomainSpec::centered(number_at(j.at("a"), "domain \"a\""));
  }
  if (kind == "box") {
    if (!j.contains("lo") || !j.contains("hi")) throw ValueError("box domain needs \"lo\" and \"hi\"");
    return DomainSpec::box(number_at(j.at("lo"), "domain \"lo\""),
                           number_at(j.at("hi"), "domain \"hi\""));
  }
  throw ValueError("unknown domain kind \"" + kind + "\"");
}

DomainSpec domain_from_string(std::string_view text) {
  if (text == "full_line" || text == "full") return DomainSpec::full_line();
  if (text == "nonneg") return DomainSpec::nonneg();
  if (text == "nonpos") return DomainSpec::nonpos();
  const auto parse_real = [](std::string_view s, const char* what) {
    try {
      std::size_t used = 0;
      const double v = std::stod(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw ValueError(std::string("cannot parse ") + what + " in domain spec");
    }
  };
  if (text.rfind("centered:", 0) == 0) {
    return DomainSpec::centered(parse_real(text.substr(9), "radius"));
  }
  if (text.rfind("box:", 0) == 0) {
    const std::string_view rest = text.substr(4);
    const std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos) throw ValueError("box domain spec needs box:LO:HI");
    return DomainSpec::box(parse_real(rest.substr(0, sep), "lower end"),
                           parse_real(rest.substr(sep + 1), "upper end"));
  }
  throw ValueError("unknown domain spec \"" + std::string(text) +
                   "\" (expected full_line, nonneg, nonpos, centered:A or box:LO:HI)");
}

Json to_json(const Witness& w) {
  Json j;
  j["x"] = w.x;
  j["x_hex"] = hex_array(w.x);
  if (!w.x2.empty()) {
    j["x2"] = w.x2;
    j["x2_hex"] = hex_array(w.x2);
  }
  if (w.cut) {
    j["cut"] = *w.cut;
    j["cut_hex"] = hex_double(*w.cut);
  }
  j["lhs"] = w.lhs;
  j["lhs_hex"] = hex_double(w.lhs);
  j["rhs"] = w.rhs;
  j["rhs_hex"] = hex_double(w.rhs);
  j["gap"] = w.gap;
  j["gap_hex"] = hex_double(w.gap);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["passed"] = v.passed;
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const SectionReport& r) {
  Json j;
  j["subset"] = r.subset;
  Json members = Json::array();
  for (int i = 0; i < 16; ++i) {
    if (r.subset & (std::uint32_t(1) << i)) members.push_back(i + 1);
  }
  j["members"] = members;
  j["additive_pos"] = to_json(r.additive_pos);
  j["additive_neg"] = to_json(r.additive_neg);
  if (r.additive_full) j["additive_full"] = to_json(*r.additive_full);
  return j;
}

Json to_json(const DiagonalReport& r) {
  Json j;
  j["sections"] = Json::array();
  for (const SectionReport& s : r.sections) j["sections"].push_back(to_json(s));
  if (r.diagonal_odd) j["diagonal_odd"] = to_json(*r.diagonal_odd);
  j["min_lemma"] = r.min_lemma();
  j["max_lemma"] = r.max_lemma();
  j["overall"] = to_json(r.overall);
  return j;
}

Json to_json(const LovaszExtension& f) {
  return Json{{"type", "lovasz"}, {"phi", to_json(f.phi())}};
}

Json to_json(const SymmetricLovaszExtension& f) {
  return Json{{"type", "symmetric"}, {"phi", to_json(f.phi())}};
}

Json to_json(const MedianAdditiveExtension& f) {
  return Json{{"type", "median"},
              {"phi", to_json(f.phi_pos())},
              {"phi_neg", to_json(f.phi_neg())}};
}

LoadedExtension extension_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw ValueError("extension must be an object with a \"type\" string");
  }
  if (!j.contains("phi")) throw ValueError("extension needs a \"phi\" set function");
  LoadedExtension loaded;
  loaded.type = j.at("type").get<std::string>();
  SetFunction phi = set_function_from_json(j.at("phi"));
  loaded.n = phi.n();
  if (loaded.type == "lovasz") {
    if (j.contains("phi_neg")) throw ValueError("\"phi_neg\" is only valid for type median");
    loaded.lovasz.emplace(std::move(phi));
    loaded.fn = as_function(*loaded.lovasz);
  } else if (loaded.type == "symmetric") {
    if (j.contains("phi_neg")) throw ValueError("\"phi_neg\" is only valid for type median");
    loaded.symmetric.emplace(std::move(phi));
    loaded.fn = as_function(*loaded.symmetric);
  } else if (loaded.type == "median") {
    if (!j.contains("phi_neg")) throw ValueError("type median needs \"phi_neg\"");
    SetFunction phi_neg = set_function_from_json(j.at("phi_neg"));
    loaded.median.emplace(std::move(phi), std::move(phi_neg));
    loaded.fn = as_function(*loaded.median);
  } else {
    throw ValueError("unknown extension type \"" + loaded.type + "\"");
  }
  return loaded;
}

std::vector<Vec> vectors_from_json(const Json& j) {
  const Json* payload = &j;
  if (j.is_object()) {
    if (j.contains("vector")) {
      Vec one = number_array(j.at("vector"), "\"vector\"");
      if (one.empty()) throw ValueError("vector must not be empty");
      return {std::move(one)};
    }
    if (j.contains("vectors")) {
      payload = &j.at("vectors");
    } else {
      throw ValueError("expected \"vector\" or \"vectors\"");
    }
  }
  if (!payload->is_array() || payload->empty()) {
    throw ValueError("vector input must be a nonempty array");
  }
  std::vector<Vec> out;
  if (payload->front().is_array()) {
    for (const Json& row : *payload) {
      Vec one = number_array(row, "vector");
      if (one.empty()) throw ValueError("vector must not be empty");
      out.push_back(std::move(one));
    }
  } else {
    out.push_back(number_array(*payload, "vector"));
  }
  return out;
}

Json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValueError("cannot parse " + source_name + ": " + e.what());
  }
}

}  // namespace choqlab
