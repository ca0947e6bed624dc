#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewdg {

int run(int argc, char** argv);
// Same as run, with explicit streams; used by the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewdg
