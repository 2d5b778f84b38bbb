#include "exlab/json_io.hpp"

namespace exlab {

nlohmann::json vertex_set_to_json(const VertexSet& s, int label_offset) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : s) out.push_back(v + label_offset);
  return out;
}

nlohmann::json census_to_json(const MinimalSetCensus& census, int label_offset) {
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& [size, count] : census.size_histogram) {
    sizes.push_back({{"size", size}, {"count", count}});
  }
  nlohmann::json sets = nlohmann::json::array();
  for (const VertexSet& s : census.sets) sets.push_back(vertex_set_to_json(s, label_offset));
  return {{"kind", set_kind_name(census.kind)},
          {"sizes", sizes},
          {"sets", sets},
          {"orbitCount", census.orbit_count}};
}

nlohmann::json exchange_report_to_json(const ExchangeReport& report, int label_offset) {
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [size, count] : report.size_histogram) {
    sizes[std::to_string(size)] = count;
  }
  nlohmann::json witness;
  if (report.witness) {
    witness = {{"S", vertex_set_to_json(report.witness->set, label_offset)},
               {"r", report.witness->replacement + label_offset}};
  } else {
    witness = nullptr;
  }
  return {{"kind", set_kind_name(report.kind)},
          {"holds", report.holds},
          {"witness", witness},
          {"sizes", sizes},
          {"equalCardinality", report.equal_cardinality}};
}

nlohmann::json exchange_evidence_to_json(const ExchangeEvidence& evidence,
                                         int label_offset) {
  nlohmann::json out;
  out["holds"] = evidence.holds;
  out["centerType"] = evidence.center_type;
  out["block"] = evidence.central_block.empty()
                     ? nlohmann::json(nullptr)
                     : vertex_set_to_json(evidence.central_block, label_offset);
  out["stabTrivial"] =
      evidence.stab_trivial ? nlohmann::json(*evidence.stab_trivial) : nullptr;
  out["movedByAll"] = evidence.moved_by_all
                          ? nlohmann::json(*evidence.moved_by_all + label_offset)
                          : nullptr;
  out["fixedPair"] =
      evidence.fixed_pair
          ? nlohmann::json({evidence.fixed_pair->first + label_offset,
                            evidence.fixed_pair->second + label_offset})
          : nullptr;
  if (!evidence.note.empty()) out["note"] = evidence.note;
  return out;
}

nlohmann::json gap_structure_to_json(const GapStructure& gaps, int label_offset) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& run : gaps.gaps) {
    nlohmann::json one = nlohmann::json::array();
    for (int v : run) one.push_back(v + label_offset);
    runs.push_back(one);
  }
  return {{"rimSize", gaps.rim_size},
          {"landmarks", vertex_set_to_json(gaps.landmarks, label_offset)},
          {"gaps", runs}};
}

nlohmann::json permutation_to_json(const Permutation& perm) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : perm) out.push_back(v);
  return out;
}

}  // namespace exlab
