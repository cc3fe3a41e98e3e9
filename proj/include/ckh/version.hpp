#pragma once

#include <cstdint>
#include <string>

namespace ckh {

inline constexpr const char* kVersion = "0.1.0";

// Identifies the grading/smoothing conventions baked into this build.
// Bump when any convention changes so that archived reports are comparable.
inline constexpr const char* kConventionsTag = "framed-doubled-a1b2-v1";

// FNV-1a over raw bytes, used to stamp reports with an input fingerprint.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace ckh
