#pragma once

#include <string>

#include "melodynet/network.hpp"

namespace melodynet {

// Directed GraphML with node attribute "label" and edge attribute "weight".
// Byte-stable: nodes in label order, edges sorted by (source, target).
std::string to_graphml(const NoteNetwork& net);

// Graphviz DOT with the same attributes and ordering.
std::string to_dot(const NoteNetwork& net);

}  // namespace melodynet
