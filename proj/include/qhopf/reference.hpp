#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qhopf {

/// Transcribed compatibility data for the eight M_2 families: row j plays x_j, column i plays x_i.
struct M2CompatCell {
  bool compatible = false;
  int zeta_exp = 0;                      // zeta_ji = q^zeta_exp
  std::vector<std::string> constraints;  // e.g. "delta_i = 0"
  bool needs_q6 = false;                 // only for q^6 = 1
};

M2CompatCell m2_compat_reference(int row_j, int row_i);

/// M_N label: catalog row and its index (b for rows 1, 5; a for rows 2, 6; 0 otherwise).
struct MnLabel {
  int row = 0, index = 0;
};

/// Labels in mn_catalog order.
std::vector<MnLabel> mn_catalog_labels(int N);

/// Transcribed M_N compatibility: q-exponent of zeta_ji, or nullopt when never compatible.
std::optional<int> mn_compat_reference(const MnLabel& j, const MnLabel& i, int N);

/// Catalog rows whose action is claimed to descend to the quantum determinant quotient.
std::vector<int> m2_det_stable_rows();
std::vector<int> mn_det_stable_rows();

}  // namespace qhopf
