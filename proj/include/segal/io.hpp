#pragma once

#include "segal/category.hpp"
#include "segal/groupoid.hpp"
#include "segal/hall.hpp"
#include "segal/multicat.hpp"
#include "segal/protoexact.hpp"
#include "segal/segal_check.hpp"
#include "segal/simplicial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace segal {

using nlohmann::json;

// schema violation; where is a dotted path into the document
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// $SEGAL_DATA or the compiled-in data directory
std::string data_dir();
json read_json(const std::string& path);
// canonical text: sorted keys, two-space indent, trailing newline
std::string dump(const json& j);

// {"N", "semi", "levels": [[ids]], "face": {"n,i": {id: id}}, "degeneracy": {...}}
SSet sset_from_json(const json& j, const std::string& where = "");
json to_json(const SSet& X);
// {"source", "target", "components": [{id: id}]}
SMap smap_from_json(const json& j, const std::string& where = "");
json to_json(const SMap& F);

// {"objects", "morphisms": [{"id", "src", "tgt"}], "compose": {"g,f": id}, "identity": {obj: id}}
FinCategory category_from_json(const json& j, const std::string& where = "");
json to_json(const FinCategory& C);
// category fields plus "inverse": {id: id}
FinGroupoid groupoid_from_json(const json& j, const std::string& where = "");
json to_json(const FinGroupoid& G);

// {"name"?, "elements", "table": [[names]]}
Group group_from_json(const json& j, const std::string& where = "");
json to_json(const Group& G, const std::string& name = "");
// {"group": name or group, "points", "action": {g: [images in point order]}}
GroupAction action_from_json(const json& j, const std::string& where = "");
// {"base": category, "values": {obj: [..]}, "restrict": {mor: {value: value}}}
Presheaf presheaf_from_json(const json& j, const std::string& where = "");

// {"instance": "vect_f1" | "vect_fq", "max_size", "q"?, "sign"?}
struct InstanceSpec {
  std::string instance = "vect_f1";
  int max_size = 2;
  int q = 1;
  int sign = 1;
  std::shared_ptr<ProtoExact> make() const;
  ContextPtr duality(std::shared_ptr<const ProtoExact> C) const;
};
InstanceSpec instance_from_json(const json& j, const std::string& where = "");
// {"zeta": [[re, im]], "f": [int]}
StabilityFraming stability_from_json(const json& j, const std::string& where = "");

// {"X2": [..], "a": {"x,y": [x', y']}}
PentagonDatum pentagon_from_json(const json& j, const std::string& where = "");
json to_json(const PentagonDatum& D);
// {"Y1": [..], "alpha": {"x,m": [m1, m2]}} over the X2 of D
APentagonDatum apentagon_from_json(const json& j, const PentagonDatum& D, const std::string& where = "");
json to_json(const PentagonDatum& D, const APentagonDatum& E);

// {"condition", "N", "header", "instances": [{"params", "verdict", "witness"?}], "pass"}
json to_json(const CheckReport& r);

json to_json(const HallTable& T);
json to_json(const HallModuleTable& M, const HallTable& T);
json to_json(const SetHallTable& T, const SSet& X);
// columns U, V, W, count
std::string to_csv(const HallTable& T);
std::string to_csv(const HallModuleTable& M, const HallTable& T);
json to_json(const Interpolation& I);
json to_json(const TableInterpolation& I);

// catalog lookups by name; throw InputError when absent
json catalog(const std::string& file);
Group catalog_group(const std::string& name);
FinCategory catalog_category(const std::string& name);
std::vector<std::string> catalog_names(const std::string& file, const std::string& list);

}  // namespace segal
