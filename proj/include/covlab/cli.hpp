#pragma once
#include <string>
#include <vector>

namespace covlab {

// Command-line front end. Exit codes: 0 success/valid verdict, 1 usage or
// data error, 2 invalidity witnessed (a certificate was emitted).
int cli_dispatch(const std::vector<std::string>& args);
int cli_dispatch(int argc, const char* const* argv);

}  // namespace covlab
