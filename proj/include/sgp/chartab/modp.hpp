/*
 * Copyright 2026 The sgp-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SGP_CHARTAB_MODP_HPP
#define SGP_CHARTAB_MODP_HPP

#include <cstdint>
#include <vector>

namespace sgp::chartab::modp {

using u64 = std::uint64_t;
/// Dense polynomial mod p, constant term first, no trailing zeros.
using Poly = std::vector<u64>;
using Matrix = std::vector<std::vector<u64>>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 k, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

/// Smallest prime p = 1 mod exponent with p > 2 sqrt(order).
u64 choose_prime(u64 exponent, u64 order);
/// An element of multiplicative order exactly n; n must divide p - 1.
u64 root_of_unity(u64 n, u64 p);

/// Characteristic polynomial det(xI - a) via Hessenberg reduction.
Poly charpoly(Matrix a, u64 p);
/// Distinct roots in F_p, ascending (deterministic Cantor-Zassenhaus).
std::vector<u64> roots(const Poly& f, u64 p);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, u64 p);
/// Basis of {x : a x = 0}.
Matrix nullspace(const Matrix& a, u64 p);

}  // namespace sgp::chartab::modp

#endif  // SGP_CHARTAB_MODP_HPP
