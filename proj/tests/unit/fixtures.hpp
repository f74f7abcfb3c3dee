#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pdec/projection.hpp"

namespace fixtures {

inline std::string read_text(const std::string& relative) {
  std::ifstream in(std::string(PDEC_FIXTURE_DIR) + "/" + relative, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture " << relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline pdec::ByteArray4x10 array(const std::string& name) {
  return pdec::ByteArray4x10::parse(read_text("examples/" + name + ".txt"));
}

}  // namespace fixtures
