#pragma once

#include <json.hpp>

#include "minrec/classes.hpp"
#include "minrec/equalizing.hpp"
#include "minrec/fn.hpp"
#include "minrec/recon.hpp"
#include "minrec/report.hpp"

namespace minrec {

using Json = nlohmann::ordered_json;

/// 1-based one-line array.
Json json_oneline(const Permutation& sigma);

Json to_json(const ClassWitness& witness);
Json to_json(const Deck& deck);
Json to_json(const EqualizingAnalysis& analysis);
Json to_json(const SweepReport& report);
/// Elapsed time is deliberately excluded so identical inputs give
/// byte-identical JSON.
Json to_json(const SuiteReport& report);

}  // namespace minrec
