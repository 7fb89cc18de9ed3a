#ifndef PENTAFOLD_REPRODUCTION_HPP
#define PENTAFOLD_REPRODUCTION_HPP

// The full verification run behind `pentafold report`.

#include <string>
#include <vector>

namespace pentafold {

struct CheckOutcome {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

std::vector<CheckOutcome> reproduce_all();

}  // namespace pentafold

#endif  // PENTAFOLD_REPRODUCTION_HPP
