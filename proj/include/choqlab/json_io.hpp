#ifndef CHOQLAB_JSON_IO_HPP
#define CHOQLAB_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "choqlab/axioms.hpp"
#include "choqlab/lovasz.hpp"
#include "choqlab/setfn.hpp"
#include "choqlab/vecops.hpp"

namespace choqlab {

using Json = nlohmann::ordered_json;

/// Hex-float rendering (printf %a): lossless and locale-independent.
/// Witness payloads carry these alongside the plain numbers.
std::string hex_double(double v);

Json to_json(const SetFunction& phi);
/// Expects {"n": int, "values": [2^n reals]}; ValueError on any
/// other shape.
SetFunction set_function_from_json(const Json& j);

Json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);
/// Compact command line form: "full_line" (or "full"), "nonneg",
/// "nonpos", "centered:A", "box:LO:HI".
DomainSpec domain_from_string(std::string_view text);

Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const SectionReport& r);
Json to_json(const DiagonalReport& r);

Json to_json(const LovaszExtension& f);
Json to_json(const SymmetricLovaszExtension& f);
Json to_json(const MedianAdditiveExtension& f);

/// An extension file loaded into a callable plus its typed form.
/// Shape: {"type": "lovasz"|"symmetric"|"median", "phi": {...},
/// "phi_neg": {...}} with phi_neg present exactly for "median".
struct LoadedExtension {
  std::string type;
  int n = 0;
  RealFn fn;
  std::optional<LovaszExtension> lovasz;
  std::optional<SymmetricLovaszExtension> symmetric;
  std::optional<MedianAdditiveExtension> median;
};

LoadedExtension extension_from_json(const Json& j);

/// Accepts one vector ([..] or {"vector": [..]}) or several
/// ([[..], ..] or {"vectors": [[..], ..]}); always returns a list.
std::vector<Vec> vectors_from_json(const Json& j);

/// Parses text as JSON, turning parse failures into ValueError with
/// the source name in the message.
Json parse_json_text(const std::string& text, const std::string& source_name);

}  // namespace choqlab

#endif  // CHOQLAB_JSON_IO_HPP
