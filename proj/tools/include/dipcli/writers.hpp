#pragma once

#include <filesystem>
#include <string>

namespace dipcli {

// All emitted numbers use 12 significant digits so golden files stay stable.
std::string g12(double v);

// The double that g12's text parses back to; JSON reports store these so
// CSV and JSON carry identical numbers.
double round12(double v);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace dipcli
