#pragma once

// Exact perfect-square detection for arbitrary-precision integers, with a
// quadratic-residue sieve in front of the integer square root.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>

namespace lucasq {

namespace detail {

template <std::size_t M>
constexpr std::array<bool, M> square_residue_table() {
    std::array<bool, M> table{};
    for (std::size_t r = 0; r < M; ++r)
        table[r * r % M] = true;
    return table;
}

inline constexpr auto squares_mod_64 = square_residue_table<64>();
inline constexpr auto squares_mod_63 = square_residue_table<63>();
inline constexpr auto squares_mod_65 = square_residue_table<65>();
inline constexpr auto squares_mod_11 = square_residue_table<11>();

// 64*63*65*11: one bigint reduction, then cheap table lookups per modulus.
inline constexpr unsigned long sieve_modulus = 64ul * 63ul * 65ul * 11ul;

}  // namespace detail

// One-sided residue test: true is inconclusive, false certifies a non-square.
// Combined acceptance rate of the four moduli is below 1%.
inline bool passes_square_sieve(const mpz_class& n) {
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), detail::sieve_modulus);
    return detail::squares_mod_64[r % 64] && detail::squares_mod_63[r % 63] &&
           detail::squares_mod_65[r % 65] && detail::squares_mod_11[r % 11];
}

// Returns the non-negative root r with r*r == n, or nullopt (negatives
// included) when n is not the square of an integer.
inline std::optional<mpz_class> is_perfect_square(const mpz_class& n) {
    if (sgn(n) < 0)
        return std::nullopt;
    if (!passes_square_sieve(n))
        return std::nullopt;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0)
        return std::nullopt;
    return root;
}

}  // namespace lucasq
