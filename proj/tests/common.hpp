#pragma once

#include <string>

#include "carnot/io.hpp"

inline carnot::GradedLieAlgebra corpus(const std::string& name) {
  return carnot::load_algebra(std::string(CARNOT_CORPUS_DIR) + "/" + name + ".json");
}

inline std::string corpus_path(const std::string& name) {
  return std::string(CARNOT_CORPUS_DIR) + "/" + name + ".json";
}
