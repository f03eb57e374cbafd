#include "racebench/pipeline.hpp"

#include <map>
#include <stdexcept>

namespace racebench {

const char* stage_layer_name(StageLayer layer) {
  switch (layer) {
    case StageLayer::kSensing: return "sensing";
    case StageLayer::kPreprocessing: return "preprocessing";
    case StageLayer::kPerception: return "perception";
    case StageLayer::kLocalizationMapping: return "localization_mapping";
    case StageLayer::kPlanning: return "planning";
    case StageLayer::kBehavior: return "behavior";
    case StageLayer::kControl: return "control";
    case StageLayer::kActuation: return "actuation";
  }
  return "unknown";
}

StageDescriptor::StageDescriptor(std::string name_, StageLayer layer_,
                                 std::set<std::string> inputs_, std::set<std::string> outputs_)
    : name(std::move(name_)), layer(layer_), inputs(std::move(inputs_)), outputs(std::move(outputs_)) {
  for (const auto& in : inputs) {
    if (outputs.count(in) != 0) {
      throw std::invalid_argument("stage '" + name + "' lists '" + in + "' as both input and output");
    }
  }
}

std::vector<Violation> validate_pipeline(const std::vector<StageDescriptor>& stages) {
  std::vector<Violation> violations;

  // Producer map; duplicate producers are reported in stage order.
  std::map<std::string, const StageDescriptor*> producers;
  for (const auto& stage : stages) {
    for (const auto& topic : stage.outputs) {
      auto [it, inserted] = producers.emplace(topic, &stage);
      if (!inserted) {
        violations.push_back({Violation::Type::kDuplicateProducer, topic,
                              "produced by both '" + it->second->name + "' and '" + stage.name + "'"});
      }
    }
  }

  for (const auto& stage : stages) {
    for (const auto& topic : stage.inputs) {
      auto it = producers.find(topic);
      if (it == producers.end()) {
        violations.push_back({Violation::Type::kMissingProducer, topic,
                              "consumed by '" + stage.name + "' with no producer"});
        continue;
      }
      const StageDescriptor& producer = *it->second;
      if (static_cast<int>(producer.layer) >= static_cast<int>(stage.layer)) {
        violations.push_back(
            {Violation::Type::kCrossLayerWarning, topic,
             "edge " + std::string(stage_layer_name(producer.layer)) + " -> " +
                 stage_layer_name(stage.layer) + " ('" + producer.name + "' -> '" + stage.name +
                 "') does not flow down the layer stack"});
      }
    }
  }

  return violations;
}

}  // namespace racebench
