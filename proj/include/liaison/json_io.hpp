// JSON encodings for every on-disk format: integer functions, class
// descriptors, models, resolutions, free-resolution stage lists, and the
// structured outputs (witnesses, verdicts, chains, claim reports).  Object
// keys serialize sorted, so all output is byte-stable.
#ifndef LIAISON_JSON_IO_HPP
#define LIAISON_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "liaison/linkage.hpp"
#include "liaison/oracle.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

using json = nlohmann::json;

// {"entries": [[degree, value], ...]}, strictly increasing degrees,
// nonzero values.
json to_json(const IntFn& f);
IntFn intfn_from_json(const json& j);
NatFn natfn_from_json(const json& j);

json to_json(const Classification& c);

json to_json(const CoreDelta& c);
CoreDelta core_from_json(const json& j);

json to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const json& j);

json to_json(const LinkageClass& cls);
LinkageClass class_from_json(const json& j);

json to_json(const DominationWitness& w, const AdmissibleCharacter& gamma);
json to_json(const BMInvariant& inv);
json to_json(const DerivedInvariants& inv);
json to_json(const DoubleLinkStep& s);
json to_json(const IntegralVerdict& v);
json to_json(const IntegralStep& s);
json to_json(const IntegralChain& c);
json to_json(const T1WitnessChain& c);
json to_json(const ClaimReport& r);
json model_to_json(const SubschemeModel& x);

// File helpers; parse failures surface as invalid_input.
json load_json_file(const std::filesystem::path& path);
LinkageClass load_class_file(const std::filesystem::path& path);

// Model file {"class": <path or inline or null>, "h": .., "theta": {..}}.
// A class supplied by the caller overrides the file's; a string class
// field resolves relative to the model file's directory.
SubschemeModel load_model_file(const std::filesystem::path& path,
                               const std::optional<LinkageClass>& override_cls);

// Free-resolution input {"stages": [[..], ..]}.
std::vector<std::vector<Deg>> stages_from_json(const json& j);

}  // namespace liaison

#endif
