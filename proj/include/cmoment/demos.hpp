#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmoment/json_io.hpp"

// End-to-end scenarios exercising the library's constructions. Each returns a
// JSON document with an anchor line, the data it built and a list of checks.
namespace cmoment::demos {

struct DemoOptions {
  double t = 0.5;             // snu2: convex parameter
  std::optional<int> window;  // extension window (scenario default if unset)
};

// Two distinct measures on R + i that share their quadrant moments through
// total degree 2N - 1: a 5-atom tau1 on R and its N-point Gauss compression
// tau2, both shifted by i.
struct ShiftedPair {
  DiscreteMeasure tau1;
  DiscreteMeasure tau2;
  DiscreteMeasure mu1;
  DiscreteMeasure mu2;
  int nodes = 2;
  int shared_order = 3;
};
ShiftedPair shifted_gauss_pair(int nodes = 2);

// z - zbar - 2i, whose zero set is the line R + i.
ZPolynomial horizontal_line_polynomial();

std::vector<std::string> names();
io::json run(const std::string& name, const DemoOptions& options = {});

}  // namespace cmoment::demos
