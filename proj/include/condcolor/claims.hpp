#pragma once

#include <optional>

#include "condcolor/families.hpp"

namespace condcolor {

enum class Theorem { prop1, thm1, thm2, thm3 };

const char* theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(const std::string& name);

// The paper's claimed chi_r as a function of the instance parameters.
// This is the single audit point for every published value; nothing else
// in the codebase hard-codes a claimed chromatic number.
//
//   prop1: chi_r(P_2 box P_n) = 4            for n, r >= 2
//   thm1:  chi_r(C_n^2), n not in {13,14,19}:
//            n                if n <= 5, or 6 <= n <= 9 and r = 4
//            3 / 4 (n mod 3)  if r = 2
//            4                if r = 3 and n !≡ 3 (mod 4)
//            5                if r = 4, n > 9, n ≡ 0 (mod 5)
//            6                if r = 4, n > 9, n !≡ 0 (mod 5)
//   thm2:  chi_r(P_n strong P_m) = 4 if r <= 3, Delta+1 if r = Delta
//   thm3:  chi_2(W(t,n)) = 4
//
// Earlier thm1 rows take precedence over later ones. Returns nullopt where
// the paper makes no claim.
std::optional<int> claimed_chi(const FamilySpec& spec, int r);

// True when a closed-form construction exists for (spec, r).
bool construction_exists(const FamilySpec& spec, int r);

}  // namespace condcolor
