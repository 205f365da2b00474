#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

namespace qvc {

// FNV-1a 64-bit. Content digests here identify inputs for reproducibility
// bookkeeping; they are not cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string digest_hex(std::uint64_t h) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::string digest_string(std::string_view bytes) { return digest_hex(fnv1a64(bytes)); }

// Digest of a file's raw bytes. Throws std::runtime_error if unreadable.
inline std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for digest: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return digest_string(buf.str());
}

} // namespace qvc
