#pragma once

#include <string>

#include "springer/component.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// Box drawing with labels, interior walls removed inside each domino.
std::string render_tableau(const DominoTableau& t);

/// Same drawing with cluster signs: in every cluster the lowest-labeled (I+)
/// domino shows the cluster's sign, the other (I+) dominoes show '+'.
std::string render_signed_class(const SignedClass& c);

}  // namespace springer
