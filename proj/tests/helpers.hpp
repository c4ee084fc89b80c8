#pragma once

#include <string>

#include "dualhopf/expression.hpp"

namespace test {

inline dualhopf::Element ge1(const std::string& src) { return dualhopf::parse_element(src, dualhopf::Sector::ge1); }
inline dualhopf::Element le0(const std::string& src) { return dualhopf::parse_element(src, dualhopf::Sector::le0); }
inline dualhopf::DualElement ge1_dual(const std::string& src) {
  return dualhopf::parse_dual_element(src, dualhopf::Sector::ge1);
}
inline dualhopf::DualElement le0_dual(const std::string& src) {
  return dualhopf::parse_dual_element(src, dualhopf::Sector::le0);
}

}  // namespace test
