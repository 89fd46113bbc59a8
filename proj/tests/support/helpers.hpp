#pragma once

#include <string>
#include <vector>

#include "qschubert/cartan.hpp"
#include "qschubert/qhring.hpp"
#include "qschubert/weyl.hpp"

namespace testing {

inline qschubert::RootSystem A(int n) { return qschubert::RootSystem::build(qschubert::LieType::A, n); }

inline qschubert::WeylElement el(const qschubert::RootSystem& rs, const std::string& word) {
  return qschubert::parse_element(rs, word);
}

inline qschubert::CorootVector lam(std::vector<int> c) { return qschubert::CorootVector(std::move(c)); }

inline qschubert::Term term(const qschubert::RootSystem& rs, const std::string& word, std::vector<int> lambda) {
  return qschubert::Term{el(rs, word), lam(std::move(lambda))};
}

inline qschubert::QHElement sum(std::initializer_list<qschubert::Term> terms) {
  qschubert::QHElement x;
  for (const auto& t : terms) x.add(t, 1);
  return x;
}

}  // namespace testing
