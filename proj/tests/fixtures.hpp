// The three worked example frames, shared across test binaries.
#ifndef ARS_TESTS_FIXTURES_HPP
#define ARS_TESTS_FIXTURES_HPP

#include "ars/parser.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace fixtures {

inline std::string read(const std::string& name) {
  std::ifstream in(std::string(ARS_FIXTURE_DIR) + "/" + name);
  if (!in)
    throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ars::FrameDocument document(const std::string& name) { return ars::parse_frame(read(name)); }
inline ars::Frame frame(const std::string& name) { return document(name).frame(); }

inline const std::vector<std::string> e1_vars{"x", "y", "z"};
inline const std::vector<std::string> e2_vars{"x", "y", "z", "w"};
inline const std::vector<std::string> e3_vars{"x", "y", "z", "w", "t"};

} // namespace fixtures

#endif
