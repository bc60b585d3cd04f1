#pragma once

/// @file prime_cache.hpp
/// @brief Binary on-disk cache of a PrimeSet.
///
/// Layout, all integers little-endian:
///
///     bytes 0..5   magic "LPRIM1"
///     byte  6      format version (1)
///     bytes 7..14  sieve limit, u64
///     then         one u64 per prime: the difference to the previous prime
///                  (the first delta is taken from 0)

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/primes.hpp"

namespace landau {

inline constexpr std::array<char, 6> prime_cache_magic{'L', 'P', 'R', 'I', 'M', '1'};
inline constexpr std::uint8_t prime_cache_version = 1;

namespace detail {

inline void put_u64_le(std::ostream& os, std::uint64_t v)
{
    std::array<char, 8> bytes{};
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(bytes.data(), bytes.size());
}

inline bool get_u64_le(std::istream& is, std::uint64_t& v)
{
    std::array<unsigned char, 8> bytes{};
    if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return true;
}

} // namespace detail

inline void write_prime_cache(std::ostream& os, const PrimeSet& ps)
{
    os.write(prime_cache_magic.data(), prime_cache_magic.size());
    os.put(static_cast<char>(prime_cache_version));
    detail::put_u64_le(os, ps.limit());
    std::uint64_t previous = 0;
    for (std::uint64_t p : ps) {
        detail::put_u64_le(os, p - previous);
        previous = p;
    }
    if (!os) throw error("failed writing prime cache");
}

/// Reads a cache written by write_prime_cache. Validates the header, the first
/// four primes, strict growth and that no prime exceeds the stored limit.
inline PrimeSet read_prime_cache(std::istream& is)
{
    std::array<char, 6> magic{};
    if (!is.read(magic.data(), magic.size()) || magic != prime_cache_magic)
        throw format_error("prime cache: bad magic");
    char version = 0;
    if (!is.get(version) || static_cast<std::uint8_t>(version) != prime_cache_version)
        throw format_error("prime cache: unsupported version");
    std::uint64_t limit = 0;
    if (!detail::get_u64_le(is, limit)) throw format_error("prime cache: truncated header");

    std::vector<std::uint64_t> primes;
    std::uint64_t delta = 0;
    std::uint64_t current = 0;
    while (detail::get_u64_le(is, delta)) {
        if (delta == 0 || delta > limit - current)
            throw format_error("prime cache: delta out of range at index " + std::to_string(primes.size()));
        current += delta;
        primes.push_back(current);
    }
    if (is.gcount() != 0) throw format_error("prime cache: trailing partial record");

    static constexpr std::array<std::uint64_t, 4> head{2, 3, 5, 7};
    for (std::size_t i = 0; i < head.size(); ++i) {
        bool expected = head[i] <= limit;
        if (expected != (i < primes.size()) || (expected && primes[i] != head[i]))
            throw format_error("prime cache: leading primes do not match 2, 3, 5, 7");
    }
    return PrimeSet(limit, std::move(primes));
}

inline void save_prime_cache(const std::string& path, const PrimeSet& ps)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("cannot open " + path + " for writing");
    write_prime_cache(os, ps);
}

inline PrimeSet load_prime_cache(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw error("cannot open " + path);
    return read_prime_cache(is);
}

} // namespace landau
