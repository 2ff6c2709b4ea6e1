#pragma once

// Static reference list of PFAS uses across electronics manufacturing and the
// availability of PFAS-free alternatives. Documentation only: nothing in the
// model computes with it.

#include <span>
#include <string_view>

namespace pfas {

struct PfasUse {
  std::string_view part;
  std::string_view pfas_type;
  std::string_view use;
  std::string_view function;
  std::string_view alternatives;
};

std::span<const PfasUse> pfas_uses();

}  // namespace pfas
