#pragma once
// Closed-form threshold math: P_th = 2/N^2, the logical-error recursion,
// accessible computation length, required depth, and pulse-accuracy limits.

#include <string>
#include <vector>

#include "qstripe/cost_model.hpp"

namespace qstripe::threshold {

using cost_model::BlockVariant;
using cost_model::CommModel;

struct AboveThresholdError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exactly 2/N^2. N < 2 is a domain error.
double p_threshold(long n_total);

// P_L = p_th * (epsilon/p_th)^(2^L), clamped to 1. Evaluated in log space.
double logical_error(double epsilon, int level, double p_th);

// (1/p_th) * (p_th/epsilon)^(2^L); requires epsilon < p_th.
double accessible_length(double epsilon, int level, double p_th);

// Smallest L with accessible_length(epsilon, L, p_th) >= length. When
// length * p_th <= 1 the answer is 0 and *note (if given) says why.
int sufficient_level(double length, double epsilon, double p_th,
                     std::string* note = nullptr);

// sin^2(phi/2) for phi in [0, pi].
double error_from_phase(double phi_rad);

// 2 sqrt(p_th) * 180 / pi.
double accuracy_threshold_deg(double p_th);

struct ThresholdRow {
  CommModel model;
  BlockVariant variant;
  long ec_count = 0;       // N_E + N_Ec
  long unitary_count = 0;  // N_U + N_Uc
  long n_total = 0;
  double p_th = 0;
  double phi_th_deg = 0;
};

// The six (model, variant) configurations in report order.
std::vector<ThresholdRow> table_report();

struct TableNote {
  int row = 0;  // 0-based index into table_report()
  double computed_phi_deg = 0;
  double published_phi_deg = 0;
  std::string text;
};

// Reference-value discrepancies worth flagging: rows where the computed
// accuracy threshold deviates from the published figure by more than 10%.
std::vector<TableNote> table_notes();

// Published reference columns for the six configurations, used for
// cross-checking the report.
extern const char* const published_p_th_2sig[6];
extern const double published_phi_deg[6];

// Round to 2 significant figures (value and fixed string form "d.de[+-]dd").
double round_2sig(double v);
std::string format_2sig(double v);

// Scientific notation with 6 significant digits, for machine-readable output.
std::string format_prob(double v);

}  // namespace qstripe::threshold
