// Shared basics: exact rational arithmetic, permutation parity, hashing.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace gcw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parity of the permutation sorting `seq` ascending (+1 even, -1 odd).
// Elements must be comparable; ties contribute no inversion.
template <typename T>
inline int sort_parity(std::span<const T> seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i]) inv ^= 1;
    return inv ? -1 : +1;
}

// FNV-1a, the artifact checksum. Stable across platforms and runs.
inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string to_hex(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
    return s;
}

class cap_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace gcw
