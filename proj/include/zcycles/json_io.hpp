#pragma once

#include <json.hpp>

#include "zcycles/colored_set.hpp"
#include "zcycles/common.hpp"
#include "zcycles/densities.hpp"
#include "zcycles/homology.hpp"
#include "zcycles/partition.hpp"
#include "zcycles/poset.hpp"
#include "zcycles/series.hpp"
#include "zcycles/shelling.hpp"

namespace zcycles {

using Json = nlohmann::ordered_json;

// numbers stay numbers while they fit in a signed 64-bit value
Json json_int(const Int& v);

Json colored_set_to_json(const ColoredSet& D);
ColoredSet colored_set_from_json(const nlohmann::json& j);

// sorted block lists of [color, index] pairs
Json partition_to_json(const ColoredSet& D, const NEqualsPartition& I);
NEqualsPartition partition_from_json(const ColoredSet& D, const nlohmann::json& j);

Json graded_dims_to_json(const GradedDims& d);     // {"degree": rank}
Json bigraded_dims_to_json(const BiGradedDims& d); // {"p,q": rank}

Json series_to_json(const Series1& s);   // {"degree": coeff}
Json series2_to_json(const Series2& s);  // {"p,q": coeff}, zeros skipped

Json lattice_to_json(const PartitionLattice& L);  // elements + cover edge list

Json el_verify_to_json(const ELVerifyResult& r);

Json manifold_to_json(const ManifoldData& X);
// {"dim": int, "betti": [..], "hodge": {"p,q,i": h}?}
ManifoldData manifold_from_json(const nlohmann::json& j);

}  // namespace zcycles
