#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "peer/types.hpp"

namespace peer {

enum class FeatureKind { continuous, binary };

struct FeatureDef {
  std::string name;
  FeatureKind kind = FeatureKind::continuous;
  std::string unit;
};

struct OutcomeDef {
  std::string name;          // death, vasopressor, ventilator
  std::string time_column;   // time to event or censorship, days
  std::string event_column;  // 1 = occurred, 0 = censored
};

// Column-typed cohort schema: the feature list plus outcome column names.
struct FeatureSchema {
  std::string id_column = "patient_id";
  std::vector<FeatureDef> features;
  std::vector<OutcomeDef> outcomes;

  std::size_t n_features() const { return features.size(); }
  std::size_t n_outcomes() const { return outcomes.size(); }
  // -1 when absent
  int feature_index(const std::string& name) const;
  int outcome_index(const std::string& name) const;
  bool is_binary(std::size_t j) const { return features[j].kind == FeatureKind::binary; }

  void validate() const;
};

// The 52-feature critical-care cohort schema (47 continuous, 5 binary
// indicators: four race flags and Male; orientation and pleural_effusion are
// 0/1-valued but typed continuous). Outcomes: death, vasopressor, ventilator.
const FeatureSchema& clinical_schema();

FeatureSchema schema_from_json(const nlohmann::json& j);
nlohmann::json schema_to_json(const FeatureSchema& schema);

FeatureSchema load_schema(const std::string& path);
void save_schema(const FeatureSchema& schema, const std::string& path);

}  // namespace peer
