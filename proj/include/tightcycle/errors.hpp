#ifndef TIGHTCYCLE_ERRORS_HPP
#define TIGHTCYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tightcycle {

// Contract violations (caller bugs).
struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct DegenerateTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegeneratePair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadEnds : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input outside the regime a construction needs; carries diagnostics.
struct PreconditionFailed : std::runtime_error {
  PreconditionFailed(const std::string& what, std::size_t observed_,
                     double allowed_)
      : std::runtime_error(what), observed(observed_), allowed(allowed_) {}
  std::size_t observed;
  double allowed;
};

// A guaranteed bound failed after the precondition held: either a bug or an
// input that slipped past the hypothesis check.
struct BoundViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Honest search failure with frontier sizes for diagnosis.
struct NoPath : std::runtime_error {
  NoPath(const std::string& what, std::size_t fwd, std::size_t bwd)
      : std::runtime_error(what), forward_frontier(fwd), backward_frontier(bwd) {}
  std::size_t forward_frontier;
  std::size_t backward_frontier;
};

struct SlotInvalid : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Stage {
  Shave,
  Reservoir,
  AbsorbingPath,
  Cover,
  LeftoverEmbed,
  Connect,
  Verify,
};

const char* stage_name(Stage s);

struct PipelineError : std::runtime_error {
  PipelineError(Stage stage_, const std::string& what)
      : std::runtime_error(std::string(stage_name(stage_)) + ": " + what),
        stage(stage_) {}
  Stage stage;
};

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Shave: return "shave";
    case Stage::Reservoir: return "reservoir";
    case Stage::AbsorbingPath: return "absorbing-path";
    case Stage::Cover: return "cover";
    case Stage::LeftoverEmbed: return "leftover-embed";
    case Stage::Connect: return "connect";
    case Stage::Verify: return "verify";
  }
  return "unknown";
}

}  // namespace tightcycle

#endif
