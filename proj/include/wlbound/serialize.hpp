#pragma once

#include <string>

#include "json.hpp"
#include "wlbound/bounds.hpp"
#include "wlbound/coloring.hpp"
#include "wlbound/partition.hpp"
#include "wlbound/rademacher.hpp"

namespace wlb {

// Key order is fixed (ordered_json) so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const ColorHistogram& histogram);
Json to_json(const SamplePartition& partition);
Json to_json(const RademacherEstimate& estimate);
Json to_json(const MultiplicityDiff& diff);
Json to_json(const DudleyResult& dudley);
Json to_json(const BoundReport& report);

/// One row per bound: name,value,inputs,note.
std::string to_csv(const BoundReport& report);

} // namespace wlb
