#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace contextlab {

/// Reproducibility header embedded in every machine-readable report:
/// re-running the same command line with the same seed reproduces the
/// core results byte for byte.
struct RunManifest {
    std::string command;
    std::uint64_t seed = 0;
    std::string version;
    int threads = 1;
    std::vector<std::pair<std::string, std::string>> input_hashes;  // path, hash
    std::vector<std::string> output_paths;
    double wall_time_s = 0.0;
};

std::string library_version();

/// FNV-1a over raw bytes, as fixed-width hex.
std::string hash_bytes_hex(const std::string& data);
/// Hash of a file's contents; throws when unreadable.
std::string hash_file_hex(const std::string& path);

class WallTimer {
  public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace contextlab
