#pragma once

// Quantitative experiments around the divergence example and the local
// log-growth laws, plus the command line entry point.

#include "dtlab/grid.hpp"
#include "dtlab/sequences.hpp"
#include "dtlab/transforms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dtlab {

int run_cli(int argc, char** argv);

}  // namespace dtlab
