#ifndef MLST_ERRORS_HPP
#define MLST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlst {

enum class Errc {
  self_loop,
  duplicate_edge,
  node_out_of_range,
  label_out_of_range,
  unused_label,
  disconnected_input,
  width_mismatch,
  param_out_of_range,
  too_many_labels,
  precondition_violated,
  infeasible_init,
  infeasible_solution,
  invalid_tree,
  infeasible_params,
  retries_exhausted,
  construction_verification_failed,
  parse_error,
  io_error,
  too_few_points,
  usage,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::node_out_of_range: return "NodeOutOfRange";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::unused_label: return "UnusedLabel";
    case Errc::disconnected_input: return "DisconnectedInput";
    case Errc::width_mismatch: return "WidthMismatch";
    case Errc::param_out_of_range: return "ParamOutOfRange";
    case Errc::too_many_labels: return "TooManyLabels";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::infeasible_init: return "InfeasibleInit";
    case Errc::infeasible_solution: return "InfeasibleSolution";
    case Errc::invalid_tree: return "InvalidTree";
    case Errc::infeasible_params: return "InfeasibleParams";
    case Errc::retries_exhausted: return "RetriesExhausted";
    case Errc::construction_verification_failed: return "ConstructionVerificationFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::usage: return "Usage";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mlst

#endif
