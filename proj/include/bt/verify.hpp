#pragma once

#include <string>
#include <vector>

namespace bt {

struct PropertyResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string detail;  // first failure, if any
};

// Each suite runs over the generic ring Z[q, q^-1].
PropertyResult check_relations_normal_form(int n);
PropertyResult check_relations_tensor(int n, int N, int r);
PropertyResult check_tensor_homomorphism(int n, int N, int r, bool corrupt = false);
PropertyResult check_idempotents(int n);
PropertyResult check_bilinear_form(int n);
PropertyResult check_crucial_pairing(int n);
PropertyResult check_first_duality(int n);
PropertyResult check_second_duality(int n);

// All of the above. With corrupt set, one coefficient of g_1 is perturbed before
// comparison with the tensor operators, so the suite must fail.
std::vector<PropertyResult> run_property_suite(int n, int N, int r, bool corrupt = false);

}  // namespace bt
