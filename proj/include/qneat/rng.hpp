#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qneat {

using Rng = std::mt19937_64;

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Every random decision pulls from a stream named (tag, a, b) under one master
// seed, so reruns and parallel evaluation replay exactly.
inline Rng derive_rng(std::uint64_t master, std::string_view tag,
                      std::uint64_t a = 0, std::uint64_t b = 0) {
  return Rng(mix64(master ^ mix64(hash_tag(tag) ^ mix64(a ^ mix64(b)))));
}

}  // namespace qneat
