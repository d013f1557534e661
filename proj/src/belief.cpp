#include "normlog/belief.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "normlog/errors.hpp"
#include "normlog/parser.hpp"

namespace normlog {

const char* attitude_name(Attitude a) {
  switch (a) {
    case Attitude::Believe: return "believe";
    case Attitude::Disbelieve: return "disbelieve";
    case Attitude::Suspend: return "suspend";
  }
  return "?";
}

Attitude BeliefState::attitude(const Formula& f) const {
  auto it = attitudes_.find(f);
  return it == attitudes_.end() ? Attitude::Suspend : it->second;
}

void BeliefState::set(const Formula& f, Attitude a) {
  auto [it, inserted] = attitudes_.emplace(f, a);
  if (!inserted && it->second != a)
    throw config_error("conflicting attitudes for '" + render(f) + "': " +
                       attitude_name(it->second) + " and " + attitude_name(a));
}

BeliefState BeliefState::load(std::istream& in) {
  BeliefState bs;
  std::string line;
  int line_no = 0;
  const auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(line.begin(), std::find_if_not(line.begin(), line.end(), is_space));
    while (!line.empty() && is_space(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (line.empty()) continue;

    const auto fail = [&](const std::string& message) -> void {
      throw config_error("belief state line " + std::to_string(line_no) + ": " +
                         message);
    };
    if (line.back() != '.') fail("missing terminating '.'");
    line.pop_back();
    const auto space = line.find_first_of(" \t");
    if (space == std::string::npos) fail("expected '<attitude> <formula>.'");
    const std::string keyword = line.substr(0, space);
    Attitude attitude;
    if (keyword == "believe")
      attitude = Attitude::Believe;
    else if (keyword == "disbelieve")
      attitude = Attitude::Disbelieve;
    else if (keyword == "suspend")
      attitude = Attitude::Suspend;
    else {
      fail("unknown attitude '" + keyword + "'");
      continue;
    }
    try {
      bs.set(parse_formula(line.substr(space)), attitude);
    } catch (const parse_error& e) {
      fail(e.what());
    }
  }
  return bs;
}

BeliefState BeliefState::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open belief state '" + path + "'");
  return load(in);
}

}  // namespace normlog
