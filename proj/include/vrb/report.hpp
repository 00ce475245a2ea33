#pragma once

#include "vrb/formal.hpp"

#include <string>
#include <vector>

namespace vrb {

struct Witness {
  std::vector<std::string> args;  // generator names of the violating tuple
  FormalPoly residual;            // LHS - RHS, nonzero and canonical
};

struct CheckReport {
  std::string check_name;
  bool passed = true;  // true iff witnesses empty
  std::vector<Witness> witnesses;
  std::size_t tuples_checked = 0;
  std::string note;
};

}  // namespace vrb
