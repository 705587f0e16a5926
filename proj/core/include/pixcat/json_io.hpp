#pragma once

#include "pixcat/auslander.hpp"
#include "pixcat/lattice.hpp"
#include "pixcat/model.hpp"
#include "pixcat/partition.hpp"
#include "pixcat/rep.hpp"
#include "pixcat/screen.hpp"
#include "pixcat/skeleton.hpp"
#include "pixcat/thincat.hpp"

#include <json.hpp>

namespace pixcat {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p" when q = 1); keys are sorted
// so every emission is byte-for-byte deterministic.

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const PathModel& m);
PathModel model_from_json(const Json& j);

Json to_json(const Screen& s);
Screen screen_from_json(const Json& j);

Json to_json(const FinitePartition& p);
FinitePartition partition_from_json(const Json& j);

Json to_json(const SkeletonQuiver& q);

Json to_json(const FiniteThinCategory& c);
FiniteThinCategory thincat_from_json(const Json& j);

Json to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const Json& j);

Json to_json(const FiniteTopology& t);
FiniteTopology topology_from_json(const Json& j);

// vertex keyed by its pixel index "i,j", arrows by "i,j->k,l"
Json rep_to_json(const QuiverRep& rep, const SkeletonQuiver& sk);
QuiverRep rep_from_json(const Json& j, const SkeletonQuiver& sk);

Json morphism_to_json(const RepMorphism& f, const SkeletonQuiver& sk);

Json to_json(const HigherAuslanderQuiver& q);

Json load_json_file(const std::string& path);

}  // namespace pixcat
