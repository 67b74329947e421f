#include "msslab/verdict.hpp"

namespace msslab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Vacuous: return "vacuous";
    case Status::Deferred: return "deferred";
    case Status::Unspecified: return "unspecified";
  }
  return "?";
}

Verdict deferred_verdict(std::string axiom, std::string missing) {
  Verdict v;
  v.axiom = std::move(axiom);
  v.status = Status::Deferred;
  v.note = "needs " + std::move(missing);
  return v;
}

}  // namespace msslab
