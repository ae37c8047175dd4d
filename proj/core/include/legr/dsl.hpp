#pragma once

#include "legr/algebra.hpp"
#include "legr/front_model.hpp"

#include <string>

namespace legr {

// .lgr text:
//   tangle NAME { left N [mu,...] event* }
//   L i m | R i [bp] | X i | V i l r [mu,...] [lbp] | B i (+|-)
// '#' starts a comment running to the end of the line.
FrontDiagram parse(const std::string& text);
FrontDiagram parse_file(const std::string& path);

// canonical text, one event per line; markings have no textual form
std::string serialize(const FrontDiagram& d);

// JSON encodings, returned as compact text
std::string polynomial_to_json(const QZPolynomial& p);
std::string diagram_to_json(const FrontDiagram& d);

}  // namespace legr
