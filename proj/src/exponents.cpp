/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#include "psdmm/exponents.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace psdmm {

std::string to_string(PlanVariant v) {
  switch (v) {
    case PlanVariant::ReplicatedProp2:
      return "replicated";
    case PlanVariant::MdsProp5:
      return "mds";
    case PlanVariant::MdsProp6:
      return "mds-large-field";
  }
  return "?";
}

namespace {

void check_dims(int p, int m, int n) {
  if (p < 1 || m < 1 || n < 1)
    throw ConfigInvalid("plan dimensions must be positive");
}

struct ExponentSets {
  std::set<std::int64_t> useful;
  std::set<std::int64_t> interference;
};

// Useful set: row-collapsed share+library sums, taken at library column
// index 0. Interference set depends on the storage layout: with a replicated
// library the servers see the share polynomial itself and the mask, so the
// bare share exponents and the mask exponent interfere; with an MDS-coded
// library the decoy matrices multiply the stored code pieces, so the bare
// library exponents interfere instead.
ExponentSets derive_sets(const ExponentPlan& plan) {
  ExponentSets s;
  const int p = plan.p, m = plan.m, n = plan.n;
  for (int k = 0; k < m; ++k)
    for (int kp = 0; kp < n; ++kp)
      s.useful.insert(plan.share_exp[k][0] + plan.library_exp[0][kp]);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < p; ++j)
      for (int jp = 0; jp < p; ++jp) {
        if (j == jp) continue;
        for (int kp = 0; kp < n; ++kp)
          s.interference.insert(plan.share_exp[k][j] +
                                plan.library_exp[jp][kp]);
      }
  for (int jp = 0; jp < p; ++jp)
    for (int kp = 0; kp < n; ++kp)
      s.interference.insert(plan.mask_exp + plan.library_exp[jp][kp]);
  if (plan.variant == PlanVariant::ReplicatedProp2) {
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < p; ++j) s.interference.insert(plan.share_exp[k][j]);
    s.interference.insert(plan.mask_exp);
  } else {
    for (int j = 0; j < p; ++j)
      for (int kp = 0; kp < n; ++kp)
        s.interference.insert(plan.library_exp[j][kp]);
  }
  return s;
}

void fill_derived(ExponentPlan& plan) {
  ExponentSets s = derive_sets(plan);
  plan.useful.assign(s.useful.begin(), s.useful.end());
  plan.interference.assign(s.interference.begin(), s.interference.end());
  std::set<std::int64_t> all = s.useful;
  all.insert(s.interference.begin(), s.interference.end());
  plan.degree = *all.rbegin();
  plan.distinct_terms = static_cast<std::int64_t>(all.size());
  plan.recovery_threshold = plan.variant == PlanVariant::MdsProp6
                                ? plan.distinct_terms
                                : plan.degree + 1;
}

}  // namespace

ExponentPlan replicated_plan(int p, int m, int n) {
  check_dims(p, m, n);
  ExponentPlan plan;
  plan.variant = PlanVariant::ReplicatedProp2;
  plan.p = p;
  plan.m = m;
  plan.n = n;
  plan.share_exp.assign(m, std::vector<std::int64_t>(p));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < p; ++j) plan.share_exp[k][j] = j + k * p + 1;
  plan.library_exp.assign(p, std::vector<std::int64_t>(n));
  for (int j = 0; j < p; ++j)
    for (int kp = 0; kp < n; ++kp)
      plan.library_exp[j][kp] =
          static_cast<std::int64_t>(p) * m - j +
          static_cast<std::int64_t>(kp) * (static_cast<std::int64_t>(p) * m + 1);
  plan.mask_exp = 0;
  fill_derived(plan);
  return plan;
}

ExponentPlan mds_plan(int p, int m, int n) {
  check_dims(p, m, n);
  ExponentPlan plan;
  plan.variant = PlanVariant::MdsProp5;
  plan.p = p;
  plan.m = m;
  plan.n = n;
  plan.share_exp.assign(m, std::vector<std::int64_t>(p));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < p; ++j)
      plan.share_exp[k][j] = static_cast<std::int64_t>(k + 1) * p * n -
                             static_cast<std::int64_t>(j) * n;
  plan.library_exp.assign(p, std::vector<std::int64_t>(n));
  for (int j = 0; j < p; ++j)
    for (int kp = 0; kp < n; ++kp)
      plan.library_exp[j][kp] = static_cast<std::int64_t>(j) * n + kp;
  plan.mask_exp = 0;
  fill_derived(plan);
  return plan;
}

ExponentPlan mds_plan_large_field(int p, int m, int n) {
  check_dims(p, m, n);
  ExponentPlan plan;
  plan.variant = PlanVariant::MdsProp6;
  plan.p = p;
  plan.m = m;
  plan.n = n;
  plan.share_exp.assign(m, std::vector<std::int64_t>(p));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < p; ++j) plan.share_exp[k][j] = j + k * p + 1;
  plan.library_exp.assign(p, std::vector<std::int64_t>(n));
  for (int j = 0; j < p; ++j)
    for (int kp = 0; kp < n; ++kp)
      plan.library_exp[j][kp] =
          p - 1 - j +
          static_cast<std::int64_t>(kp) * (static_cast<std::int64_t>(p) * m + 1);
  plan.mask_exp = 0;
  fill_derived(plan);
  return plan;
}

VerificationReport verify_plan(const ExponentPlan& plan) {
  VerificationReport rep;
  std::ostringstream detail;
  const int p = plan.p, m = plan.m, n = plan.n;

  rep.exponent_alignment = true;
  for (int k = 0; k < m && rep.exponent_alignment; ++k) {
    for (int kp = 0; kp < n && rep.exponent_alignment; ++kp) {
      const std::int64_t want = plan.share_exp[k][0] + plan.library_exp[0][kp];
      for (int j = 1; j < p; ++j) {
        if (plan.share_exp[k][j] + plan.library_exp[j][kp] != want) {
          rep.exponent_alignment = false;
          detail << "alignment broken at block (" << k << "," << kp
                 << ") column " << j << "; ";
          break;
        }
      }
    }
  }

  ExponentSets s = derive_sets(plan);
  const bool full = s.useful.size() == static_cast<std::size_t>(m) * n;
  bool disjoint = true;
  for (std::int64_t u : s.useful) {
    if (s.interference.count(u)) {
      disjoint = false;
      detail << "useful exponent " << u << " collides with interference; ";
      break;
    }
  }
  if (!full) detail << "useful set has " << s.useful.size() << " < m*n entries; ";
  rep.useful_unique = full && disjoint;

  std::set<std::int64_t> all = s.useful;
  all.insert(s.interference.begin(), s.interference.end());
  rep.computed_degree = *all.rbegin();
  rep.computed_distinct_terms = static_cast<std::int64_t>(all.size());
  rep.computed_threshold = plan.variant == PlanVariant::MdsProp6
                               ? rep.computed_distinct_terms
                               : rep.computed_degree + 1;
  rep.threshold_consistent = plan.recovery_threshold == rep.computed_threshold;
  if (!rep.threshold_consistent)
    detail << "stored threshold " << plan.recovery_threshold
           << " != recomputed " << rep.computed_threshold << "; ";

  const std::int64_t pmn = static_cast<std::int64_t>(p) * m * n;
  switch (plan.variant) {
    case PlanVariant::ReplicatedProp2:
      rep.closed_form_threshold = pmn + static_cast<std::int64_t>(p) * m + n;
      break;
    case PlanVariant::MdsProp5:
      // Published closed form; the example and condition (iii) force one more.
      rep.closed_form_threshold = pmn + static_cast<std::int64_t>(p) * n - 1;
      break;
    case PlanVariant::MdsProp6:
      rep.closed_form_threshold = pmn + n + p - 1;
      break;
  }
  rep.closed_form_matches =
      rep.closed_form_threshold == rep.computed_threshold;
  if (!rep.closed_form_matches)
    detail << "closed form " << rep.closed_form_threshold
           << " differs from computed " << rep.computed_threshold << "; ";

  rep.all_pass =
      rep.exponent_alignment && rep.useful_unique && rep.threshold_consistent;
  rep.detail = detail.str();
  return rep;
}

BaselineTable baseline_thresholds(int p, int m, int n,
                                  std::optional<std::int64_t> r_star) {
  check_dims(p, m, n);
  BaselineTable t;
  t.p = p;
  t.m = m;
  t.n = n;
  const std::int64_t pmn = static_cast<std::int64_t>(p) * m * n;
  t.kim_lee = static_cast<std::int64_t>(m + 1) * (n + 1);
  t.aliasgari = pmn + static_cast<std::int64_t>(p) * n +
                static_cast<std::int64_t>(p) * m - p + 2;
  t.chang_tandon_min = m + 1;
  t.replicated_new = pmn + static_cast<std::int64_t>(p) * m + n;
  t.mds_new = pmn + static_cast<std::int64_t>(p) * n;
  t.mds_large_field = pmn + n + p - 1;
  if (r_star) {
    t.yu = 2 * *r_star + 1;
    t.improvement_vs_yu_pct =
        100.0 * static_cast<double>(*t.yu - t.replicated_new) /
        static_cast<double>(*t.yu);
  }
  return t;
}

}  // namespace psdmm
