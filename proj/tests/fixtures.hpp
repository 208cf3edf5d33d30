#pragma once

#include "zetask/complex_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace zetask::testing {

inline std::string fixture_dir() {
    if (const char* p = std::getenv("ZETASK_FIXTURES")) return p;
    return "fixtures";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_text(const std::string& name) {
    return read_file(fixture_dir() + "/" + name);
}

inline StrataComplex fixture(const std::string& name) {
    return parse_complex_or_throw(fixture_text(name));
}

} // namespace zetask::testing
