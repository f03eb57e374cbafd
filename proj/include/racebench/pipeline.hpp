#pragma once

#include <set>
#include <string>
#include <vector>

namespace racebench {

// The eight pipeline layers, ordered top to bottom. The ordering index is
// what validate_pipeline uses to classify edges.
enum class StageLayer {
  kSensing = 0,
  kPreprocessing,
  kPerception,
  kLocalizationMapping,
  kPlanning,
  kBehavior,
  kControl,
  kActuation,
};

const char* stage_layer_name(StageLayer layer);

struct StageDescriptor {
  std::string name;
  StageLayer layer;
  std::set<std::string> inputs;
  std::set<std::string> outputs;

  // Throws std::invalid_argument if inputs and outputs overlap.
  StageDescriptor(std::string name_, StageLayer layer_, std::set<std::string> inputs_,
                  std::set<std::string> outputs_);
};

struct Violation {
  enum class Type {
    kMissingProducer,
    kDuplicateProducer,
    kCrossLayerWarning,
  };

  Type type;
  std::string topic;
  std::string detail;

  bool is_warning() const { return type == Type::kCrossLayerWarning; }
};

// Checks that every consumed topic has a producer, that no topic has two
// producers, and annotates edges that do not flow from a lower layer to a
// strictly higher one as cross-layer warnings. Pure and order-stable.
std::vector<Violation> validate_pipeline(const std::vector<StageDescriptor>& stages);

}  // namespace racebench
