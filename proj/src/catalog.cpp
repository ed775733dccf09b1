#include "cohom1/catalog.hpp"

#include <cstdlib>
#include <filesystem>

namespace cohom1 {

#ifndef COHOM1_DEFAULT_DATA_DIR
#define COHOM1_DEFAULT_DATA_DIR "data"
#endif

std::string catalog_dir() {
    if (const char* env = std::getenv("COHOM1_DATA")) return env;
    return COHOM1_DEFAULT_DATA_DIR;
}

std::vector<std::string> catalog_names() {
    return {"example1", "example2", "example3", "sphere3",
            "flatcone", "berger",   "solv2",    "solv4"};
}

FibrationData catalog_load(const std::string& name) {
    std::filesystem::path p = std::filesystem::path(catalog_dir()) / (name + ".json");
    if (!std::filesystem::exists(p))
        throw InvalidInput("unknown catalog entry: " + name + " (looked in " +
                           catalog_dir() + ")");
    return load_fibration(p.string());
}

}  // namespace cohom1
