#ifndef WB_JSON_IO_HPP
#define WB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "wb/admissible.hpp"
#include "wb/dejongh.hpp"
#include "wb/kripke_prop.hpp"
#include "wb/kripke_set.hpp"
#include "wb/prover.hpp"
#include "wb/root_extension.hpp"

namespace wb {

using Json = nlohmann::json;

// {"nodes":[...], "cover":[["r","t"],...], "valuation":{"t":["p"]}}
Json prop_model_to_json(const PropKripkeModel& m);
PropKripkeModel prop_model_from_json(const Json& j);

// {"nodes":[...], "cover":[...], "domains":{"v":["a"]},
//  "transitions":{"v->w":{"a":"a'"}}, "membership":{"v":[["a","b"]]}}
Json set_model_to_json(const SetKripkeModel& m);
SetKripkeModel set_model_from_json(const Json& j);

// set model plus a "root_elements" section recording x(r)/x(v)/rank
Json extension_to_json(const RootExtension& ext);

// {"premises":[...], "conclusions":[...]} with formulas as grammar strings
Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j, Lang lang);

// {"nodes":[...], "cover":[...], "valuation":{"p":["l1"]},
//  "leaves":{"l1":{"vrank":2}}} — leaves accept "vrank" or "ordinal"
Json tree_to_json(const SplittingTree& t);
SplittingTree tree_from_json(const Json& j);

Json ipc_verdict_to_json(const IpcVerdict& v);
Json cpc_verdict_to_json(const CpcVerdict& v);
Json admissibility_to_json(const AdmissibilityVerdict& v);

Json load_json_file(const std::string& path);

}  // namespace wb

#endif
