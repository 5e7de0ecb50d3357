#include "peer/schema.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace peer {

int FeatureSchema::feature_index(const std::string& name) const {
  for (std::size_t j = 0; j < features.size(); ++j)
    if (features[j].name == name) return static_cast<int>(j);
  return -1;
}

int FeatureSchema::outcome_index(const std::string& name) const {
  for (std::size_t k = 0; k < outcomes.size(); ++k)
    if (outcomes[k].name == name) return static_cast<int>(k);
  return -1;
}

void FeatureSchema::validate() const {
  if (features.empty()) throw ValidationError("schema has no features");
  if (outcomes.empty()) throw ValidationError("schema has no outcomes");
  std::set<std::string> seen;
  seen.insert(id_column);
  for (const auto& f : features) {
    if (f.name.empty()) throw ValidationError("schema has an unnamed feature");
    if (!seen.insert(f.name).second)
      throw ValidationError("duplicate column name in schema: " + f.name);
  }
  for (const auto& o : outcomes) {
    if (!seen.insert(o.time_column).second)
      throw ValidationError("duplicate column name in schema: " + o.time_column);
    if (!seen.insert(o.event_column).second)
      throw ValidationError("duplicate column name in schema: " + o.event_column);
  }
}

namespace {

FeatureSchema build_clinical_schema() {
  FeatureSchema s;
  s.id_column = "patient_id";
  auto c = [](const char* name, const char* unit) {
    return FeatureDef{name, FeatureKind::continuous, unit};
  };
  auto b = [](const char* name) { return FeatureDef{name, FeatureKind::binary, "0/1"}; };
  s.features = {
      c("rbcs", "millions/uL"),
      c("wbc", "thousands/uL"),
      c("platelets", "thousands/uL"),
      c("hemoglobin", "g/dL"),
      c("hct", "%"),
      c("rdw", "%"),
      c("mcv", "fL"),
      c("mch", "pg"),
      c("mchc", "g/dL"),
      c("neutrophils", "%"),
      c("lymphocytes", "%"),
      c("monocytes", "%"),
      c("eosinophils", "%"),
      c("basophils", "%"),
      c("bun", "mg/dL"),
      c("temperature", "degC"),
      c("ph", ""),
      c("sodium", "mmol/L"),
      c("glucose", "mg/dL"),
      c("pao2", "mmHg"),
      c("ldh", "units/L"),
      c("direct_bilirubin", "mg/L"),
      c("total_bilirubin", "mg/L"),
      c("total_protein", "g/dL"),
      c("albumin", "g/dL"),
      c("pt", "sec"),
      c("ptt", "sec"),
      c("ast", "units/L"),
      c("alt", "units/L"),
      c("creatinine", "mg/dL"),
      c("troponin", "ng/mL"),
      c("alkaline_phosphatase", "units/L"),
      c("bands", "%"),
      c("bicarbonate", "mmol/L"),
      c("calcium", "mg/dL"),
      c("chloride", "mmol/L"),
      c("potassium", "mmol/L"),
      c("age", "years"),
      c("heart_rate", "beats/min"),
      c("sao2", "%"),
      c("gcs", "score"),
      c("respiratory_rate", "breaths/min"),
      c("bp_systolic", "mmHg"),
      c("bp_diastolic", "mmHg"),
      c("bp_mean_arterial", "mmHg"),
      c("pleural_effusion", "0/1"),
      c("orientation", "0/1 (1=confused)"),
      b("African American"),
      b("Asian"),
      b("Caucasian"),
      b("Hispanic"),
      b("Male"),
  };
  s.outcomes = {
      {"death", "time_death", "event_death"},
      {"vasopressor", "time_vasopressor", "event_vasopressor"},
      {"ventilator", "time_ventilator", "event_ventilator"},
  };
  s.validate();
  return s;
}

}  // namespace

const FeatureSchema& clinical_schema() {
  static const FeatureSchema s = build_clinical_schema();
  return s;
}

FeatureSchema schema_from_json(const nlohmann::json& j) {
  FeatureSchema s;
  if (j.contains("id_column")) s.id_column = j.at("id_column").get<std::string>();
  for (const auto& f : j.at("features")) {
    FeatureDef d;
    d.name = f.at("name").get<std::string>();
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "continuous")
      d.kind = FeatureKind::continuous;
    else if (kind == "binary")
      d.kind = FeatureKind::binary;
    else
      throw ValidationError("unknown feature kind '" + kind + "' for " + d.name);
    if (f.contains("unit")) d.unit = f.at("unit").get<std::string>();
    s.features.push_back(std::move(d));
  }
  for (const auto& o : j.at("outcomes")) {
    s.outcomes.push_back(OutcomeDef{o.at("name").get<std::string>(),
                                    o.at("time_column").get<std::string>(),
                                    o.at("event_column").get<std::string>()});
  }
  s.validate();
  return s;
}

nlohmann::json schema_to_json(const FeatureSchema& schema) {
  nlohmann::json j;
  j["format"] = "peer-schema/1";
  j["id_column"] = schema.id_column;
  j["features"] = nlohmann::json::array();
  for (const auto& f : schema.features) {
    j["features"].push_back(
        {{"name", f.name},
         {"kind", f.kind == FeatureKind::binary ? "binary" : "continuous"},
         {"unit", f.unit}});
  }
  j["outcomes"] = nlohmann::json::array();
  for (const auto& o : schema.outcomes) {
    j["outcomes"].push_back({{"name", o.name},
                             {"time_column", o.time_column},
                             {"event_column", o.event_column}});
  }
  return j;
}

FeatureSchema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schema file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("invalid schema JSON in " + path + ": " + e.what());
  }
  return schema_from_json(j);
}

void save_schema(const FeatureSchema& schema, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write schema file: " + path);
  out << schema_to_json(schema).dump(2) << "\n";
}

}  // namespace peer
