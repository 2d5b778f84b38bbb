#ifndef EXLAB_JSON_IO_HPP
#define EXLAB_JSON_IO_HPP

#include <string>

#include "exlab/determining.hpp"
#include "exlab/exchange.hpp"
#include "exlab/outerplanar.hpp"
#include "exlab/wheels.hpp"
#include "json.hpp"

namespace exlab {

// Serializers for the report payloads.  label_offset shifts every vertex id
// in the output (offset 1 reproduces the 1-based labels of the source
// fixtures); internal state stays 0-based.

nlohmann::json vertex_set_to_json(const VertexSet& s, int label_offset = 0);
nlohmann::json census_to_json(const MinimalSetCensus& census, int label_offset = 0);
nlohmann::json exchange_report_to_json(const ExchangeReport& report,
                                       int label_offset = 0);
nlohmann::json exchange_evidence_to_json(const ExchangeEvidence& evidence,
                                         int label_offset = 0);
nlohmann::json gap_structure_to_json(const GapStructure& gaps, int label_offset = 0);
nlohmann::json permutation_to_json(const Permutation& perm);

}  // namespace exlab

#endif
