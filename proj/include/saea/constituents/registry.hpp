#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "saea/constituents/constituent.hpp"
#include "saea/constituents/ego_lcb.hpp"
#include "saea/constituents/gors_sslpso.hpp"
#include "saea/constituents/vesaea.hpp"

namespace saea::constituents {

inline constexpr std::array<std::string_view, 3> kConstituentIds = {"ego-lcb", "vesaea",
                                                                    "gors-sslpso"};

inline bool is_constituent_id(std::string_view id) {
  for (auto known : kConstituentIds) {
    if (id == known) return true;
  }
  return false;
}

inline std::unique_ptr<Constituent> make_constituent(std::string_view id) {
  if (id == "ego-lcb") return std::make_unique<EgoLcb>();
  if (id == "vesaea") return std::make_unique<Vesaea>();
  if (id == "gors-sslpso") return std::make_unique<GorsSslpso>();
  throw std::invalid_argument("unknown constituent id: " + std::string(id));
}

}  // namespace saea::constituents
