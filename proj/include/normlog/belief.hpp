#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "normlog/formula.hpp"

namespace normlog {

// Believing and not-disbelieving are different requirements, so the
// attitude is three-valued; unmapped formulas are suspended.
enum class Attitude { Believe, Disbelieve, Suspend };

const char* attitude_name(Attitude a);

class BeliefState {
 public:
  Attitude attitude(const Formula& f) const;
  bool believes(const Formula& f) const {
    return attitude(f) == Attitude::Believe;
  }
  bool disbelieves(const Formula& f) const {
    return attitude(f) == Attitude::Disbelieve;
  }

  // Rejects contradictory re-declarations.
  void set(const Formula& f, Attitude a);

  const std::map<Formula, Attitude>& entries() const { return attitudes_; }

  // File format, one line per declaration, "#" comments:
  //   believe <formula>.
  //   disbelieve <formula>.
  //   suspend <formula>.
  static BeliefState load(std::istream& in);
  static BeliefState load_file(const std::string& path);

 private:
  std::map<Formula, Attitude> attitudes_;
};

}  // namespace normlog
