#include "condcolor/claims.hpp"

#include "condcolor/constructions.hpp"

namespace condcolor {

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::prop1:
      return "prop1";
    case Theorem::thm1:
      return "thm1";
    case Theorem::thm2:
      return "thm2";
    case Theorem::thm3:
      return "thm3";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(const std::string& name) {
  if (name == "prop1") return Theorem::prop1;
  if (name == "thm1") return Theorem::thm1;
  if (name == "thm2") return Theorem::thm2;
  if (name == "thm3") return Theorem::thm3;
  return std::nullopt;
}

std::optional<int> claimed_chi(const FamilySpec& spec, int r) {
  switch (spec.family) {
    case Family::grid2n:
      if (spec.n >= 2 && r >= 2) return 4;
      return std::nullopt;

    case Family::cycle_square: {
      const int n = spec.n;
      if (n < 3 || n == 13 || n == 14 || n == 19) return std::nullopt;
      if (n <= 5) return n;
      if (n <= 9 && r == 4) return n;
      if (r == 2) return n % 3 == 0 ? 3 : 4;
      if (r == 3 && n % 4 != 3) return 4;
      if (r == 4 && n > 9) return n % 5 == 0 ? 5 : 6;
      return std::nullopt;
    }

    case Family::strong_grid: {
      if (spec.n < 2 || spec.m < 2) return std::nullopt;
      const int max_deg = (spec.n == 2 && spec.m == 2) ? 3 : (std::min(spec.n, spec.m) == 2 ? 5 : 8);
      if (r >= 1 && r <= 3) return 4;
      if (r == max_deg) return max_deg + 1;
      return std::nullopt;
    }

    case Family::web:
      if (spec.t >= 1 && spec.n >= 3 && r == 2) return 4;
      return std::nullopt;

    default:
      return std::nullopt;
  }
}

bool construction_exists(const FamilySpec& spec, int r) {
  try {
    switch (spec.family) {
      case Family::grid2n:
        if (r < 2) return false;
        grid2n_coloring(spec.n);
        return true;
      case Family::cycle_square:
        cycle_square_coloring(spec.n, r);
        return true;
      case Family::strong_grid:
        strong_grid_coloring(spec.n, spec.m, r);
        return true;
      case Family::web:
        if (r != 2) return false;
        web_dynamic_coloring(spec.t, spec.n);
        return true;
      default:
        return false;
    }
  } catch (const UnsupportedCase&) {
    return false;
  } catch (const ExcludedCase&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace condcolor
