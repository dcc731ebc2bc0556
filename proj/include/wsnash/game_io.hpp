#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wsnash/game.hpp"

namespace wsnash {

// Game file format:
//   symmetric N        (or "bimatrix N")
//   N rows of N entries for R; bimatrix files follow with N rows for C
// Entries are "p/q" rationals or finite decimals, whitespace-separated.
// Lines whose first non-blank character is '#' are comments. For symmetric
// files C is materialized as R transposed. Throws ParseError with 1-based
// line/column of the offending token.
BimatrixGame parse_game(std::string_view text);

// Inverse of parse_game: emits "symmetric N" when C = R^T, else "bimatrix N".
// Round-trips exactly.
std::string render_game(const BimatrixGame& game);

// Profile file format: two lines of n entries (row strategy, then column).
StrategyProfile parse_profile(std::string_view text, std::size_t n);

std::string render_profile(const StrategyProfile& profile);

enum class GameKind { Uniform, WinLose };

// Seeded random game: Uniform draws entries k/1000 with k equally likely in
// 0..1000; WinLose draws entries from {0, 1}. With symmetric set, only R is
// drawn and C = R^T. Identical arguments yield identical games.
BimatrixGame generate_game(GameKind kind, std::size_t n, std::uint64_t seed, bool symmetric);

} // namespace wsnash
