#pragma once

#include <optional>
#include <string>

#include "hocat/premodel.hpp"

namespace hocat {

enum class SaturationMode { L, Lc, R, Rc };

inline std::string to_string(SaturationMode m) {
  switch (m) {
    case SaturationMode::L: return "L";
    case SaturationMode::Lc: return "Lc";
    case SaturationMode::R: return "R";
    case SaturationMode::Rc: return "Rc";
  }
  return "?";
}

inline std::optional<SaturationMode> parse_saturation_mode(std::string_view s) {
  if (s == "L") return SaturationMode::L;
  if (s == "Lc") return SaturationMode::Lc;
  if (s == "R") return SaturationMode::R;
  if (s == "Rc") return SaturationMode::Rc;
  return std::nullopt;
}

namespace detail {

inline void require_factorizations(const FiniteCategory& c, const ArrowClass& l, const ArrowClass& r, const char* what) {
  for (auto h : c.morphisms()) {
    if (!factorize(c, h, l, r)) throw NoFactorization(std::string("saturation: no ") + what + " factorization of '" + c.name(h) + "'", h);
  }
}

}  // namespace detail

/// L and Lc keep (C, AF) and make (core) acyclic cofibrations anodyne:
/// F' = F ∩ rlp(S), AC' = llp(F'). R and Rc are the mirror image on (C, AF).
inline PremodelStructure saturate(const PremodelStructure& p, SaturationMode mode) {
  const auto& c = p.category();
  const std::string name = p.name() + "." + to_string(mode);
  switch (mode) {
    case SaturationMode::L:
    case SaturationMode::Lc: {
      const auto s = mode == SaturationMode::L ? acyclic_cofibrations(p) : core_acyclic_cofibrations(p);
      auto fib = p.fibrations() & complement_rlp(c, s);
      auto acof = complement_llp(c, fib);
      detail::require_factorizations(c, acof, fib, "(anodyne cofibration, fibration)");
      return PremodelStructure(p.category_ptr(), p.cofibrations(), p.anodyne_fibrations(), std::move(acof), std::move(fib), name);
    }
    case SaturationMode::R:
    case SaturationMode::Rc: {
      const auto k = mode == SaturationMode::R ? acyclic_fibrations(p) : core_acyclic_fibrations(p);
      auto cof = p.cofibrations() & complement_llp(c, k);
      auto afib = complement_rlp(c, cof);
      detail::require_factorizations(c, cof, afib, "(cofibration, anodyne fibration)");
      return PremodelStructure(p.category_ptr(), std::move(cof), std::move(afib), p.anodyne_cofibrations(), p.fibrations(), name);
    }
  }
  throw InputError("unknown saturation mode");
}

struct BiSaturation {
  PremodelStructure right_of_left;  // R(L(p))
  PremodelStructure left_of_right;  // L(R(p))
  [[nodiscard]] bool orders_agree() const { return right_of_left == left_of_right; }
};

inline BiSaturation bi_saturate_both(const PremodelStructure& p) {
  return {saturate(saturate(p, SaturationMode::L), SaturationMode::R), saturate(saturate(p, SaturationMode::R), SaturationMode::L)};
}

/// R(L(p)); the other order is available through bi_saturate_both.
inline PremodelStructure bi_saturate(const PremodelStructure& p) {
  auto out = saturate(saturate(p, SaturationMode::L), SaturationMode::R);
  out.set_name(p.name() + ".bisat");
  return out;
}

}  // namespace hocat
