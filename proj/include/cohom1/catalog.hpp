#pragma once

#include <string>
#include <vector>

#include "cohom1/liealg.hpp"

namespace cohom1 {

// Names of the built-in data files shipped under data/.
std::vector<std::string> catalog_names();

// Loads a built-in entry by name.  Set COHOM1_DATA to override the data
// directory.  example3 documents why only n = 2 ships; other n are
// rejected by catalog_load("example3_n<k>") simply not existing.
FibrationData catalog_load(const std::string& name);

std::string catalog_dir();

}  // namespace cohom1
