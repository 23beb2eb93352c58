#include "contextlab/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "contextlab/rational.hpp"
#include "contextlab/rng.hpp"

namespace contextlab {

std::string library_version() { return "contextlab 0.1.0"; }

std::string hash_bytes_hex(const std::string& data) {
    uint64_t h = fnv1a(data);
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string hash_file_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return hash_bytes_hex(ss.str());
}

}  // namespace contextlab
