#pragma once
#include <string>
#include <vector>
namespace hlf { int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err); }
