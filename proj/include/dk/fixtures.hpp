// Named example payloads shared by the CLI and the Python bindings.  Each
// fixture is returned as a validated JSON payload truncated at degree T;
// fixtures whose natural degree exceeds T are clamped rather than rejected.

#pragma once

#include <string>
#include <vector>

#include "dk/json_io.hpp"

namespace dk {

Json make_fixture(const std::string& name, int T);
std::vector<std::string> fixture_names();

}  // namespace dk
