#include "cli/registry.hpp"

namespace dobinski::cli {

const std::vector<std::string>& library_operations() {
  static const std::vector<std::string> ops{
      "stirling2",         "stirling1_signed",     "falling_factorial",   "bell_polynomial",
      "bell_number",       "inverse_stirling_transform", "generalized_stirling",
      "generalized_bell_polynomial", "dobinski_eval", "bell_asymptotic", "partitions_n_into_k",
      "multivariate_bell", "compose_series",       "hermite_kdf",         "hermite3",
      "overlap",           "exact_matrix_element", "toy_closed_form",     "exact_diag_quartic",
      "series_in_xi",      "series_in_G",          "general_series_coeffs", "pade_from_coeffs",
      "pade_eval",         "resum"};
  return ops;
}

const std::vector<RegistryEntry>& command_registry() {
  static const std::vector<RegistryEntry> reg{
      {{"table", "--kind", "stirling2", "--n-max", "6"}, {"stirling2"}},
      {{"table", "--kind", "stirling1", "--n-max", "6"}, {"stirling1_signed"}},
      {{"table", "--kind", "falling", "--n-max", "6"}, {"falling_factorial"}},
      {{"table", "--kind", "bell", "--n-max", "8"}, {"bell_number", "bell_polynomial"}},
      {{"table", "--kind", "transform", "--alpha", "0,1,1"}, {"inverse_stirling_transform"}},
      {{"table", "--kind", "genstirling", "--alpha", "0,1", "--n-max", "4"},
       {"inverse_stirling_transform", "generalized_stirling"}},
      {{"table", "--kind", "genbell", "--alpha", "0,1", "--n-max", "4"},
       {"inverse_stirling_transform", "generalized_bell_polynomial"}},
      {{"table", "--kind", "asymptotic", "--n-max", "20"}, {"bell_asymptotic", "bell_number"}},
      {{"table", "--kind", "partitions", "--n-max", "6"}, {"partitions_n_into_k"}},
      {{"table", "--kind", "mbell", "--n-max", "6", "--args", "1,1,1,1,1,1"}, {"multivariate_bell"}},
      {{"table", "--kind", "compose", "--f", "1,1,1/2,1/6,1/24", "--gser", "0,1,-1/2,1/3,-1/4", "--order", "4"},
       {"compose_series"}},
      {{"table", "--kind", "hermite", "--M", "2", "--args", "-1,-1", "--n-max", "8"}, {"hermite_kdf"}},
      {{"table", "--kind", "hermite3", "--args", "1,1,1", "--n-max", "6"}, {"hermite3"}},
      {{"exact", "--kind", "dobinski", "--n", "5", "--x", "1", "--alpha", "1"},
       {"inverse_stirling_transform", "dobinski_eval", "bell_polynomial"}},
      {{"exact", "--kind", "overlap", "--z", "1,0.5", "--zprime", "0.8,0.1"}, {"overlap"}},
      {{"exact", "--kind", "matrix", "--alpha", "0,1,1", "--lambda", "0.5", "--z", "1,0.5", "--zprime", "0.8,0.1"},
       {"exact_matrix_element"}},
      {{"exact", "--kind", "toy", "--lambda", "0.5", "--z", "1,0.5", "--zprime", "0.8,0.1"},
       {"toy_closed_form", "exact_matrix_element"}},
      {{"exact", "--kind", "quartic", "--g", "1", "--G", "1", "--xi", "1", "--x", "1"}, {"exact_diag_quartic"}},
      {{"series", "--variable", "xi", "--order", "6"}, {"series_in_xi"}},
      {{"series", "--variable", "G", "--order", "6"}, {"series_in_G"}},
      {{"series", "--variable", "lambda", "--alpha", "0,1", "--x", "1", "--order", "6"},
       {"general_series_coeffs"}},
      {{"pade", "--coeffs", "1,1,1/2", "--L", "1", "--M", "1", "--at", "0.5"}, {"pade_from_coeffs", "pade_eval"}},
      {{"pade", "--series", "G", "--L", "3", "--M", "4", "--at", "1"}, {"series_in_G", "pade_from_coeffs", "resum"}},
      {{"sweep", "--range", "0:1:5"}, {"exact_diag_quartic", "series_in_G", "resum"}},
      {{"selftest"}, {"stirling2", "stirling1_signed", "dobinski_eval", "exact_matrix_element", "pade_from_coeffs"}},
  };
  return reg;
}

}  // namespace dobinski::cli
