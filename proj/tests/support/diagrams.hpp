#pragma once

#include "legr/dsl.hpp"

namespace legr::samples {

inline const char* lambda_src =
    "tangle lambda { left 0 [] L 1 1 L 2 1 L 3 1 V 4 3 3 [0,0,0] R 3 bp R 2 bp R 1 bp }";

inline FrontDiagram lambda() { return parse(lambda_src); }

}  // namespace legr::samples
