#ifndef GALGEBRA_UNITGRP_HPP
#define GALGEBRA_UNITGRP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galgebra/algebra.hpp"
#include "galgebra/group.hpp"
#include "galgebra/wedderburn.hpp"

namespace galg {

/// U(A)/V for the modular p-group case: A/J is one-dimensional, so the
/// quotient is the cyclic group F_q* of order q-1. The flags record the
/// verification (quotient really is the field F_q; its unit group exhaustively
/// checked cyclic for q up to 2^20).
struct UnitQuotientInfo {
  BigInt order;                // q - 1
  std::string description;     // C_{q-1}
  bool quotient_is_field;
  bool cyclic_verified;
};
UnitQuotientInfo unit_quotient(const GroupAlgebra& a);

/// V = 1 + J materialized as a Group, with access back to the algebra
/// elements. Only available when q^{dim J} <= 2^16.
struct UnitGroupEnumeration {
  Group group;
  GroupAlgebra algebra;
  std::function<AlgebraElement(int)> element;  // index -> 1 + j
};
UnitGroupEnumeration enumerate_v(const GroupAlgebra& a);

/// Exponent of V. In characteristic 2 the upper bound comes from the exact
/// iterated square-span chain W_0 = J, W_{s+1} = span{w^2, w_i w_j + w_j w_i}
/// (over char 2, span{u^2 : u in W} equals that span, so W_s = 0 certifies
/// j^{2^s} = 0 for every j); the lower bound from an explicit witness with
/// j^{2^{s-1}} != 0, searched over the radical basis and then 10^4 seeded
/// random elements. For p > 2 the exponent is read off the enumerated group.
struct ExponentCertificate {
  int exponent;                      // 2^s upper bound; exact when witnessed
  bool witness_found;                // lower bound confirmed
  std::optional<AlgebraElement> witness;
  std::vector<int> square_span_dims; // dims of W_0, W_1, ...
  int radical_nilpotency_index;      // least t with J^t = 0 (ideal powers)
};
ExponentCertificate exponent_of_v(const GroupAlgebra& a);

/// Nilpotency class of the enumerated V via its lower central series.
int nilpotency_class_of_v(const GroupAlgebra& a);

/// (V' contained in the algebra centre, V'' central in V), both computed on
/// the enumerated group.
struct MetabelianFlags {
  bool derived_in_center;
  bool second_derived_central;
};
MetabelianFlags centrally_metabelian_check(const GroupAlgebra& a);

/// Full enumerated analysis in one pass (the series sweep dominates the cost,
/// so class and metabelian flags share it).
struct ModularVAnalysis {
  std::vector<int> series_sizes;  // |gamma_1|, |gamma_2|, ...
  int nilpotency_class;
  bool derived_in_center;
  bool second_derived_central;
  int exponent;  // from element orders
  // characteristic 2 only: group squaring agrees with 1+j -> 1+j^2 on all of V
  bool squaring_matches_radical = true;
};
ModularVAnalysis analyze_enumerated_v(const GroupAlgebra& a);

/// Report for the modular p-group regime. Fields that need the enumeration
/// stay unset when q^{dim J} exceeds the cap.
struct ModularUnitReport {
  int dim_j = 0;
  BigInt order_v;  // q^{dim J}
  int exponent = 1;
  bool exponent_witnessed = true;
  std::optional<int> nilpotency_class;
  std::optional<bool> derived_in_center;
  std::optional<bool> second_derived_central;
  UnitQuotientInfo quotient;
  std::vector<int> square_span_dims;
  int radical_nilpotency_index = 1;
};
ModularUnitReport modular_unit_report(const GroupAlgebra& a);

/// Formal unit-group structure of a semisimple algebra: GL(n, q^d) factors
/// with GL(1, Q) rendered as C_{Q-1}, e.g. "C_2^4 x GL(2,3)^3".
std::string semisimple_unit_structure(const WedderburnShape& shape, std::int64_t q);

}  // namespace galg

#endif
