#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace polarimeter {

// FIPS 180-4 SHA-256, used to fingerprint input files in the run manifest.
// Self-contained so the build has no crypto-library dependency; unit tests
// check it against the published NIST example digests.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

}  // namespace polarimeter
